use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "murphy", version, about = "Octics T(m, A, x), simplest fields and Murphy's condition")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report for one parameter pair.
    Analyze(AnalyzeArgs),
    /// Degree of E and group labels over a box of integer pairs.
    Scan(ScanArgs),
    /// Murphy's twins with quadratic subfield Q(sqrt d).
    Twins(TwinsArgs),
    /// Run a verification suite; exits 1 on any failure.
    Verify(VerifyArgs),
    /// Shen polynomials P_n(a, x).
    Shen(ShenArgs),
    /// The simplest families of degrees 3 to 6.
    Families(FamiliesArgs),
    /// Regulators from the closed forms and the estimates.
    Regulator(RegulatorArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// `m` as an integer or `p/q`.
    #[arg(allow_hyphen_values = true)]
    pub m: String,
    /// `A` as an integer or `p/q`.
    #[arg(allow_hyphen_values = true)]
    pub a: String,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// `N` for `|m| <= N`, or `lo:hi`.
    #[arg(long, allow_hyphen_values = true, default_value = "10")]
    pub m_range: String,
    /// `N` for `|A + (m+2)/2| <= N`, or `lo:hi`.
    #[arg(long, allow_hyphen_values = true, default_value = "10")]
    pub a_range: String,
    /// Write per-pair rows to this path (`-` for stdout).
    #[arg(long)]
    pub csv: Option<String>,
}

#[derive(Args, Debug)]
pub struct TwinsArgs {
    /// Squarefree `d > 1`, a sum of two squares.
    #[arg(long, default_value = "5")]
    pub d: String,
    /// Index range `lo:hi` or a single index.
    #[arg(long, allow_hyphen_values = true, default_value = "1:6")]
    pub j: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Families,
    Shen,
    Order10,
    Regulators,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "core")]
    pub suite: Suite,
}

#[derive(Args, Debug)]
pub struct ShenArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub a: String,
}

#[derive(Args, Debug)]
pub struct FamiliesArgs {
    /// `cubic_a`, `quartic_b`, `washington_c`, `quintic_d`, `sextic_e` or a letter.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
}

#[derive(Args, Debug)]
pub struct RegulatorArgs {
    /// `imag_m01`, `imag_mgt2`, `twin_real` or `dihedral_real`.
    #[arg(long, conflicts_with = "estimate")]
    pub case: Option<String>,
    /// `m1_tinyR`, `sw1_tinyR` or `sdb_tinyR`.
    #[arg(long)]
    pub estimate: Option<String>,
    /// Index range for `--estimate`.
    #[arg(long, allow_hyphen_values = true, default_value = "4:6")]
    pub j: String,
    #[arg(allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(allow_hyphen_values = true)]
    pub a: Option<String>,
}
