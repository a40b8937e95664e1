use std::fs::File;
use std::io::{self, Write};

use murphy_core::classify::classify;
use murphy_core::exact::{is_integer, parse_rational, Integer};
use murphy_core::families::{
    family_poly, lambda_cycle_check, order10_check, shen_build, shen_disc_check, verify_m, verify_m_family,
    washington_equiv, FamilyKind,
};
use murphy_core::murphy::{
    build_bundle, mu, mu_case, murphy_identity_check, octic, sigma_mod_t, verify_core_identities, Params, Regime,
};
use murphy_core::numfield::{
    regulator, regulator_estimate_check, twins_enumerate, unit_checks, EstimateFamily, RegulatorCase, RegulatorReport,
    TwinFamily,
};
use murphy_core::scan::{abelian_nonreal, scan_row, summarize, ScanRange, ScanRow};
use murphy_core::{rat, Error, Poly, Rational};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{AnalyzeArgs, FamiliesArgs, RegulatorArgs, ScanArgs, ShenArgs, Suite, TwinsArgs, VerifyArgs};

pub const SCHEMA: u32 = 1;
pub const DEFAULT_BITS: usize = 256;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

pub struct Outcome {
    pub value: Value,
    pub ok: bool,
}

impl Outcome {
    fn pass(value: Value) -> Outcome {
        Outcome { value, ok: true }
    }
}

pub fn precision_bits() -> Result<usize, CliError> {
    match std::env::var("MURPHY_PRECISION_BITS") {
        Err(_) => Ok(DEFAULT_BITS),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(b) if (32..=8192).contains(&b) => Ok(b),
            _ => Err(CliError::Usage(format!("MURPHY_PRECISION_BITS must be an integer in 32..=8192, got {s:?}"))),
        },
    }
}

fn rational_arg(name: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("{name}: {e}")))
}

fn int_arg(name: &str, s: &str) -> Result<i64, CliError> {
    s.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("{name}: expected an integer, got {s:?}")))
}

/// `N` means `-N..=N`; `lo:hi` is taken literally.
fn range_arg(name: &str, s: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (int_arg(name, a)?, int_arg(name, b)?),
        None => {
            let n = int_arg(name, s)?;
            if n < 0 {
                return Err(CliError::Usage(format!("{name}: bound must be nonnegative")));
            }
            (-n, n)
        }
    };
    Ok((lo, hi))
}

fn index_range(name: &str, s: &str) -> Result<(i64, i64), CliError> {
    match s.split_once(':') {
        Some((a, b)) => Ok((int_arg(name, a)?, int_arg(name, b)?)),
        None => {
            let j = int_arg(name, s)?;
            Ok((j, j))
        }
    }
}

fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn poly(p: &Poly<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(q).collect())
}

fn params_json(p: &Params) -> Value {
    json!({ "m": q(&p.m), "A": q(&p.a) })
}

fn checks_json<'a>(items: impl IntoIterator<Item = (&'a str, bool)>) -> Value {
    Value::Array(items.into_iter().map(|(name, pass)| json!({ "name": name, "pass": pass })).collect())
}

fn degenerate_label(params: &Params) -> Option<&'static str> {
    if num_is_zero(&mu(params)) {
        return Some(mu_case(params).label());
    }
    match params.regime() {
        Regime::Generic => None,
        _ => match sigma_mod_t(params) {
            Err(Error::Degenerate(c)) => Some(c.label()),
            _ => None,
        },
    }
}

fn num_is_zero(x: &Rational) -> bool {
    *x == Rational::from_integer(0.into())
}

pub fn analyze(args: &AnalyzeArgs, bits: usize) -> Result<Outcome, CliError> {
    let params = Params::new(rational_arg("m", &args.m)?, rational_arg("A", &args.a)?);
    let t = octic(&params);
    let related = params.related();
    let mut out = json!({
        "params": params_json(&params),
        "precision_bits": bits,
        "T": poly(&t),
        "s2": q(&params.s2()),
        "w2": q(&params.w2()),
        "y2": q(&params.y2()),
        "mu": q(&mu(&params)),
        "related": params_json(&related),
        "self_related": related == params,
    });
    let obj = out.as_object_mut().expect("object");
    let factors: Vec<Value> = t
        .squarefree_decomposition()?
        .into_iter()
        .map(|(f, k)| json!({ "factor": poly(&f), "multiplicity": k }))
        .collect();
    obj.insert("squarefree_factors".into(), Value::Array(factors));
    if let Some(label) = degenerate_label(&params) {
        obj.insert("degenerate".into(), Value::String(label.into()));
    }
    if let Ok(b) = build_bundle(&params) {
        if let Some((p, pbar)) = b.twins() {
            obj.insert("twins".into(), json!({ "Psw": poly(&p), "Psw_bar": poly(&pbar) }));
        }
        if let Some((p, pbar)) = b.dihedral_pair() {
            obj.insert("dihedral".into(), json!({ "Pw": poly(&p), "Pw_bar": poly(&pbar) }));
        }
    }
    match classify(&params) {
        Ok(c) => {
            let f = c.square_flags;
            obj.insert(
                "classification".into(),
                json!({
                    "degE": c.deg_e,
                    "group": c.group.to_string(),
                    "abelian": c.group.is_abelian(),
                    "signature": [c.signature.0, c.signature.1],
                    "totally_real": c.totally_real,
                    "T_irreducible": c.t_irreducible,
                    "Psw_irreducible": c.psw_irreducible,
                    "squares": { "s": f.s, "w": f.w, "y": f.y, "sw": f.sw, "sy": f.sy, "wy": f.wy, "swy": f.swy },
                    "notes": c.notes,
                }),
            );
        }
        Err(e) => {
            obj.insert("classification_error".into(), Value::String(e.to_string()));
        }
    }
    if is_integer(&params.m) && is_integer(&params.a) {
        if let Ok(u) = unit_checks(&params) {
            let checks: Vec<(&str, bool)> = u.checks.iter().map(|c| (c.name.as_str(), c.pass)).collect();
            obj.insert(
                "units".into(),
                json!({
                    "T(-1)": q(&u.t_at_minus_one),
                    "exceptional_triple": u.exceptional_triple,
                    "checks": checks_json(checks),
                    "notes": u.notes,
                }),
            );
        }
    }
    Ok(Outcome::pass(out))
}

fn row_csv(w: &mut csv::Writer<Box<dyn Write>>, r: &ScanRow) -> csv::Result<()> {
    w.write_record([
        r.m.to_string(),
        r.a.to_string(),
        r.deg_e.to_string(),
        r.group.to_string(),
        r.real_roots.to_string(),
        r.notes.join("; "),
    ])
}

pub fn scan(args: &ScanArgs, bits: usize) -> Result<Outcome, CliError> {
    let (m_min, m_max) = range_arg("--m-range", &args.m_range)?;
    let (c_min, c_max) = range_arg("--a-range", &args.a_range)?;
    let range = ScanRange { m_min, m_max, c_min, c_max };
    let pairs = range.pairs();
    let rows: Vec<ScanRow> = pairs.par_iter().map(|&(m, a)| scan_row(m, a)).collect::<murphy_core::Result<_>>()?;
    if let Some(path) = &args.csv {
        let sink: Box<dyn Write> = if path == "-" {
            Box::new(io::stdout())
        } else {
            Box::new(File::create(path).map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?)
        };
        let mut w = csv::Writer::from_writer(sink);
        let io_err = |e: csv::Error| CliError::Usage(format!("cannot write {path}: {e}"));
        w.write_record(["m", "A", "degE", "group", "real_roots", "notes"]).map_err(io_err)?;
        for r in &rows {
            row_csv(&mut w, r).map_err(io_err)?;
        }
        w.flush().map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?;
    }
    let s = summarize(&rows);
    let histogram: serde_json::Map<String, Value> =
        s.histogram.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let abelian: Vec<Value> = abelian_nonreal(&rows).into_iter().map(|(m, a)| json!([m, a])).collect();
    let mut out = json!({
        "range": { "m": [m_min, m_max], "center": [c_min, c_max] },
        "precision_bits": bits,
        "pairs": rows.len(),
        "counted": s.counted,
        "special": s.special,
        "degE_histogram": histogram,
        "degE8_fraction": s.deg8_fraction,
        "abelian_nonreal": abelian,
    });
    if s.deg8_fraction.is_none() {
        out["note"] = Value::String("no pairs with m != +-2; fraction undefined".into());
    }
    Ok(Outcome::pass(out))
}

fn family_name(f: &TwinFamily) -> String {
    match f {
        TwinFamily::Sw1 => "sw1".into(),
        TwinFamily::Sw2 => "sw2".into(),
        TwinFamily::NormMinusOne { k, sign } => format!("norm-1 k={k} sign={sign}"),
        TwinFamily::NormPlusOne { n, sign } => format!("norm+1 n={n} sign={sign}"),
    }
}

pub fn twins(args: &TwinsArgs) -> Result<Outcome, CliError> {
    let d: Integer =
        args.d.trim().parse().map_err(|_| CliError::Usage(format!("--d: expected an integer, got {:?}", args.d)))?;
    let (lo, hi) = index_range("--j", &args.j)?;
    let pairs = match twins_enumerate(&d, lo..=hi) {
        Ok(p) => p,
        Err(e @ (Error::InvalidArgument(_) | Error::NotSquarefree(_) | Error::NotSumOfTwoSquares(_))) => {
            return Err(CliError::Usage(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut ok = true;
    let items: Vec<Value> = pairs
        .iter()
        .map(|t| {
            let holds = t.invariant_holds();
            ok &= holds;
            json!({
                "family": family_name(&t.family),
                "j": t.j,
                "params": params_json(&t.params()),
                "sw": q(&t.sw),
                "Psw": poly(&t.psw),
                "Psw_bar": poly(&t.psw_bar),
                "product_is_T": holds,
                "degenerate": t.degenerate,
            })
        })
        .collect();
    Ok(Outcome { value: json!({ "d": d.to_string(), "j": [lo, hi], "twins": items }), ok })
}

fn core_samples() -> Vec<Params> {
    let mut out = vec![Params::ints(3, 13), Params::ints(1, 0), Params::new(rat(-7, 3), rat(5, 2))];
    for i in 0..40i64 {
        let m = rat((7 * i) % 23 - 11, 1 + i % 3);
        let a = rat((13 * i) % 29 - 14, 1 + i % 4);
        let p = Params::new(m, a);
        if p.regime() == Regime::Generic && !num_is_zero(&mu(&p)) {
            out.push(p);
        }
    }
    out
}

fn suite_core() -> Result<Outcome, CliError> {
    let mut ok = true;
    let mut items = Vec::new();
    for p in core_samples() {
        let r = verify_core_identities(&p);
        let m4 = murphy_identity_check(&p)?;
        ok &= r.all_pass() && m4;
        let checks: Vec<(&str, bool)> = r.results.iter().map(|c| (c.name, c.pass)).chain([("M4 mod T", m4)]).collect();
        items.push(json!({ "params": params_json(&p), "pass": r.all_pass() && m4, "identities": checks_json(checks) }));
    }
    Ok(Outcome { value: json!({ "suite": "core", "pass": ok, "cases": items }), ok })
}

fn suite_families() -> Result<Outcome, CliError> {
    let mut ok = true;
    let mut items = Vec::new();
    for kind in FamilyKind::ALL {
        let r = verify_m_family(kind);
        ok &= r.pass();
        let failures: Vec<Value> = r.failures.iter().map(q).collect();
        items.push(json!({
            "family": kind.label(),
            "pass": r.pass(),
            "samples": r.samples,
            "degree_bound": r.bound.bound,
            "failures": failures,
        }));
    }
    let mut wash = Vec::new();
    for t in [-5i64, -3, -1, 1, 3, 5] {
        let r = washington_equiv(&rat(t, 1))?;
        ok &= r.all_pass();
        wash.push(json!({ "t": t, "pass": r.all_pass() }));
    }
    Ok(Outcome { value: json!({ "suite": "families", "pass": ok, "families": items, "washington": wash }), ok })
}

fn suite_shen(bits: usize) -> Result<Outcome, CliError> {
    let mut ok = true;
    let mut disc = Vec::new();
    for n in 2..=10 {
        let pass = shen_disc_check(n)?;
        ok &= pass;
        disc.push(json!({ "n": n, "pass": pass }));
    }
    let mut lambda = Vec::new();
    for (n, a) in [(4u32, 1i64), (6, 3), (8, 2), (12, 5)] {
        let r = lambda_cycle_check(n, &rat(a, 1), bits)?;
        ok &= r.all_pass();
        lambda.push(json!({ "n": n, "a": a, "pass": r.all_pass(), "cyclic": r.cyclic, "perm": r.perm }));
    }
    Ok(Outcome {
        value: json!({ "suite": "shen", "pass": ok, "precision_bits": bits, "discriminant": disc, "lambda": lambda }),
        ok,
    })
}

fn suite_order10() -> Outcome {
    let r = order10_check(20);
    let checks = [
        ("M^10 is scalar", r.m10_scalar),
        ("M^5 is not scalar", !r.m5_scalar),
        ("(M) n=10 for sigma = f", r.holds_for(1)),
        ("(M) n=10 for sigma = f^(7)", r.holds_for(7)),
        ("(M) n=10 for y3 under f^(3)", r.y3_under_f3),
    ];
    let ok = checks.iter().all(|c| c.1);
    let samples: Vec<Value> = r.samples.iter().map(q).collect();
    Outcome {
        value: json!({
            "suite": "order10",
            "pass": ok,
            "checks": checks_json(checks),
            "samples": samples,
            "informational": {
                "name": "(M) n=10 for sigma = f^(3)",
                "holds": r.holds_for(3),
                "note": "the sum for f^(3) itself does not vanish; the conjugate-product form y3 does",
            },
        }),
        ok,
    }
}

fn real_json(r: &murphy_core::numeric::Real) -> Value {
    Value::String(r.to_decimal())
}

fn regulator_json(r: &RegulatorReport) -> Value {
    let eps = &r.fundamental_unit;
    json!({
        "case": r.case.label(),
        "params": params_json(&r.params),
        "d": r.d.as_ref().map(q),
        "field": poly(&r.field_poly),
        "unit_system": r.unit_system,
        "torsion": r.torsion,
        "fundamental_unit": { "d": eps.d.to_string(), "x": eps.x.to_string(), "y": eps.y.to_string(), "norm": eps.norm },
        "precision_bits": r.precision,
        "regulator": real_json(&r.log_matrix_det),
        "closed_form": real_json(&r.closed_form),
        "minor_spread": r.minor_spread.to_f64(),
        "tolerance": r.tolerance.to_f64(),
        "matches": r.matches,
        "index": r.index.as_ref().map(|i| json!({
            "predicted_two": i.predicted_two,
            "ratio": real_json(&i.ratio),
            "halves": i.halves,
        })),
    })
}

fn suite_regulators(bits: usize) -> Result<Outcome, CliError> {
    let mut ok = true;
    let mut items = Vec::new();
    let cases = [
        (RegulatorCase::ImagM01, 1, 2),
        (RegulatorCase::ImagMgt2, 3, -6),
        (RegulatorCase::TwinReal, 3, 13),
        (RegulatorCase::DihedralReal, 47, -95),
        (RegulatorCase::DihedralReal, 102, -205),
    ];
    for (case, m, a) in cases {
        let r = regulator(case, &Params::ints(m, a), bits)?;
        ok &= r.matches;
        items.push(regulator_json(&r));
    }
    let mut estimates = Vec::new();
    for family in EstimateFamily::ALL {
        let e = regulator_estimate_check(family, 4..=6, bits)?;
        ok &= e.within_quarter && e.trending;
        let ratios: Vec<Value> = (4..=6).map(|j| json!({ "j": j, "ratio": e.ratio(j) })).collect();
        estimates.push(json!({
            "family": family.label(),
            "ratios": ratios,
            "fitted_c": e.fitted_c,
            "within_quarter": e.within_quarter,
            "trending": e.trending,
        }));
    }
    Ok(Outcome {
        value: json!({ "suite": "regulators", "pass": ok, "precision_bits": bits, "closed_forms": items, "estimates": estimates }),
        ok,
    })
}

pub fn verify(args: &VerifyArgs, bits: usize) -> Result<Outcome, CliError> {
    match args.suite {
        Suite::Core => suite_core(),
        Suite::Families => suite_families(),
        Suite::Shen => suite_shen(bits),
        Suite::Order10 => Ok(suite_order10()),
        Suite::Regulators => suite_regulators(bits),
    }
}

pub fn shen(args: &ShenArgs, bits: usize) -> Result<Outcome, CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let a = rational_arg("--a", &args.a)?;
    let sp = shen_build(args.n)?;
    let p = sp.at(&a);
    let disc = shen_disc_check(args.n)?;
    let mut out = json!({
        "n": args.n,
        "a": q(&a),
        "precision_bits": bits,
        "P": poly(&p),
        "Q": poly(&sp.q),
        "V": poly(&sp.v),
        "discriminant_formula": disc,
    });
    let mut ok = disc;
    match lambda_cycle_check(args.n, &a, bits) {
        Ok(r) => {
            ok &= r.all_pass();
            out["lambda"] = json!({
                "pass": r.all_pass(),
                "cyclic": r.cyclic,
                "perm": r.perm,
                "sum_ok": r.sum_ok,
                "s_vanishes": r.s_vanishes,
            });
        }
        Err(e) => out["lambda_error"] = Value::String(e.to_string()),
    }
    Ok(Outcome { value: out, ok })
}

pub fn families(args: &FamiliesArgs) -> Result<Outcome, CliError> {
    let kinds: Vec<FamilyKind> = match &args.kind {
        Some(k) => vec![FamilyKind::parse(k).ok_or_else(|| CliError::Usage(format!("unknown family {k:?}")))?],
        None => FamilyKind::ALL.to_vec(),
    };
    let t = args.t.as_deref().map(|s| rational_arg("--t", s)).transpose()?;
    let mut ok = true;
    let mut items = Vec::new();
    for kind in kinds {
        match &t {
            Some(t) => {
                let spec = family_poly(kind, t).map_err(|e| CliError::Usage(e.to_string()))?;
                let m = verify_m(&spec);
                ok &= m;
                items.push(json!({
                    "family": kind.label(),
                    "t": q(t),
                    "degree": spec.n,
                    "P": poly(&spec.p),
                    "sigma_num": poly(&spec.sigma_num),
                    "sigma_den": poly(&spec.sigma_den),
                    "sigma_order": spec.sigma_order(12)?,
                    "murphy_condition": m,
                }));
            }
            None => {
                let r = verify_m_family(kind);
                ok &= r.pass();
                items.push(json!({
                    "family": kind.label(),
                    "degree": kind.degree(),
                    "murphy_condition": r.pass(),
                    "samples": r.samples,
                    "degree_bound": r.bound.bound,
                }));
            }
        }
    }
    Ok(Outcome { value: json!({ "families": items }), ok })
}

pub fn regulator_cmd(args: &RegulatorArgs, bits: usize) -> Result<Outcome, CliError> {
    if let Some(name) = &args.estimate {
        let family =
            EstimateFamily::parse(name).ok_or_else(|| CliError::Usage(format!("unknown estimate family {name:?}")))?;
        let (lo, hi) = index_range("--j", &args.j)?;
        if lo < 1 || hi > 8 || lo > hi {
            return Err(CliError::Usage("--j must lie within 1:8".into()));
        }
        let e = regulator_estimate_check(family, lo..=hi, bits)?;
        let rows: Vec<Value> = e
            .rows
            .iter()
            .map(|r| {
                json!({
                    "j": r.j,
                    "params": params_json(&r.params),
                    "field": poly(&r.field_poly),
                    "delta": q(&r.delta),
                    "precondition": r.precondition,
                    "regulator": r.r1.as_ref().map(real_json),
                    "estimate": r.estimate.as_ref().map(real_json),
                    "ratio": r.ratio.as_ref().map(|x| x.to_f64()),
                    "skipped": r.skipped,
                })
            })
            .collect();
        let ok = e.within_quarter && e.trending;
        return Ok(Outcome {
            value: json!({
                "family": family.label(),
                "precision_bits": bits,
                "rows": rows,
                "fitted_c": e.fitted_c,
                "within_quarter": e.within_quarter,
                "trending": e.trending,
            }),
            ok,
        });
    }
    let name = args.case.as_deref().ok_or_else(|| CliError::Usage("give --case or --estimate".into()))?;
    let case = RegulatorCase::parse(name).ok_or_else(|| CliError::Usage(format!("unknown case {name:?}")))?;
    let (Some(m), Some(a)) = (&args.m, &args.a) else {
        return Err(CliError::Usage("--case needs M and A".into()));
    };
    let params = Params::new(rational_arg("m", m)?, rational_arg("A", a)?);
    let r = match regulator(case, &params, bits) {
        Ok(r) => r,
        Err(e @ (Error::Hypothesis(_) | Error::InvalidArgument(_))) => return Err(CliError::Usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome { ok: r.matches, value: regulator_json(&r) })
}
