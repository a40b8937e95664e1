//! Square tests, the degree of `E = k(s, w, y)`, Galois-group labels and
//! real-root counts for `T(m, A, x)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{DegenerateCase, Error, Result};
use crate::exact::{int, is_integer, is_square, perfect_square, zero, Rational};
use crate::murphy::{octic, Params, Regime};
use crate::numeric::{real_root_count, DEFAULT_PRECISION};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    T8_11,
    Q8,
    D8,
    C4xC2,
    C4Twins,
    D4Quartic,
    V4,
    C4,
    Degenerate(String),
}

impl GroupLabel {
    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupLabel::C4 | GroupLabel::C4xC2 | GroupLabel::C4Twins | GroupLabel::V4)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::T8_11 => f.write_str("8T11"),
            GroupLabel::Q8 => f.write_str("Q8"),
            GroupLabel::D8 => f.write_str("D8(8)"),
            GroupLabel::C4xC2 => f.write_str("C4xC2"),
            GroupLabel::C4Twins => f.write_str("C4_twins"),
            GroupLabel::D4Quartic => f.write_str("D4_quartic"),
            GroupLabel::V4 => f.write_str("V4"),
            GroupLabel::C4 => f.write_str("C4"),
            GroupLabel::Degenerate(c) => write!(f, "degenerate({c})"),
        }
    }
}

/// Which of `s^2, w^2, y^2, s^2w^2, s^2y^2, w^2y^2, s^2w^2y^2` are squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareFlags {
    pub s: bool,
    pub w: bool,
    pub y: bool,
    pub sw: bool,
    pub sy: bool,
    pub wy: bool,
    pub swy: bool,
}

impl SquareFlags {
    pub fn of(s2: &Rational, w2: &Rational, y2: &Rational) -> SquareFlags {
        SquareFlags {
            s: is_square(s2),
            w: is_square(w2),
            y: is_square(y2),
            sw: is_square(&(s2 * w2)),
            sy: is_square(&(s2 * y2)),
            wy: is_square(&(w2 * y2)),
            swy: is_square(&(s2 * w2 * y2)),
        }
    }

    pub fn as_array(&self) -> [bool; 7] {
        [self.s, self.w, self.y, self.sw, self.sy, self.wy, self.swy]
    }
}

/// `[k(a_1, ..., a_n) : k]` for square roots of the given rationals.
pub fn multiquadratic_degree(squares: &[Rational]) -> u32 {
    let gens: Vec<&Rational> = squares.iter().filter(|q| **q != zero()).collect();
    let n = gens.len();
    let mut kernel = 0u32;
    for mask in 0u32..(1 << n) {
        let mut prod = int(1);
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                prod *= *g;
            }
        }
        if is_square(&prod) {
            kernel += 1;
        }
    }
    (1u32 << n) / kernel
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub params: Params,
    pub s2: Rational,
    pub w2: Rational,
    pub y2: Rational,
    pub square_flags: SquareFlags,
    pub deg_e: u32,
    pub t_irreducible: bool,
    /// Only meaningful when `s w` is rational.
    pub psw_irreducible: Option<bool>,
    pub group: GroupLabel,
    pub signature: (usize, usize),
    pub totally_real: bool,
    pub notes: Vec<String>,
}

struct Special {
    m: i64,
    a: i64,
    group: GroupLabel,
    note: &'static str,
}

fn specials() -> [Special; 6] {
    let twins = "twins define the same C4 extension of Q";
    let cyc = "s^2 y^2 is a square and Pw is cyclic quartic";
    [
        Special { m: -3, a: -4, group: GroupLabel::C4, note: twins },
        Special { m: -7, a: 8, group: GroupLabel::C4, note: twins },
        Special { m: -66, a: 13, group: GroupLabel::C4, note: twins },
        Special { m: -3, a: 5, group: GroupLabel::C4, note: cyc },
        Special { m: -7, a: -3, group: GroupLabel::C4, note: cyc },
        Special { m: -66, a: 51, group: GroupLabel::C4, note: cyc },
    ]
}

/// `t` with `(m, A) = (t^2 + 2, -t^2 - 2t - 4)` when `w^2 = 0`.
pub fn washington_t(params: &Params) -> Option<Rational> {
    if params.w2() != zero() {
        return None;
    }
    Some(-(&params.a + &params.m + int(2)) / int(2))
}

fn washington_label(t: &Rational) -> (GroupLabel, String) {
    if *t == zero() || *t == int(-2) {
        return (GroupLabel::Degenerate(String::from("w^2 = 0 with t in {0, -2}")), format!("Washington case t = {t}"));
    }
    if is_square(&(t * t + int(4))) {
        return (
            GroupLabel::Degenerate(String::from("w^2 = 0 with t^2 + 4 a square")),
            format!("Washington case t = {t}, P_t reducible"),
        );
    }
    (GroupLabel::C4, format!("T = P_t^2, Washington cyclic quartic with t = {t}"))
}

fn regime_label(params: &Params) -> (GroupLabel, String) {
    let a = &params.a;
    match params.regime() {
        Regime::MTwo => (
            GroupLabel::Degenerate(String::from(DegenerateCase::MEqualsTwo.label())),
            format!("p = (x+1)^2 (x^2 - {} x + 1), T = p^2", a + int(2)),
        ),
        Regime::MMinusTwo => {
            if is_square(&(a * a + int(16))) {
                (
                    GroupLabel::Degenerate(String::from(DegenerateCase::MEqualsMinusTwo.label())),
                    String::from("simplest quartic with A^2 + 16 a square is reducible"),
                )
            } else {
                (GroupLabel::C4, String::from("T = p^2 with p a simplest quartic"))
            }
        }
        Regime::SquareDiscriminant => (
            GroupLabel::Degenerate(String::from(DegenerateCase::SquareDiscriminant.label())),
            String::from("m^2 - 4 is a nonzero square; u is rational"),
        ),
        Regime::Generic => unreachable!(),
    }
}

/// Galois label, irreducibility and notes from square tests alone.
fn label(params: &Params, flags: &SquareFlags, deg_e: u32, notes: &mut Vec<String>) -> GroupLabel {
    if params.regime() != Regime::Generic {
        let (g, n) = regime_label(params);
        notes.push(n);
        return g;
    }
    let (w2, y2) = (params.w2(), params.y2());
    if w2 == zero() {
        let t = washington_t(params).expect("w^2 = 0");
        let (g, n) = washington_label(&t);
        notes.push(n);
        return g;
    }
    if y2 == zero() {
        let rel = params.related();
        let t = washington_t(&rel).expect("related w^2 = 0");
        let (g, n) = washington_label(&t);
        notes.push(format!("y^2 = 0; related octic ({}, {}) has {n}", rel.m, rel.a));
        return g;
    }
    if let (Some(m), Some(a)) = (small_int(&params.m), small_int(&params.a)) {
        for sp in specials() {
            if sp.m == m && sp.a == a {
                notes.push(String::from(sp.note));
                return sp.group;
            }
        }
    }
    match deg_e {
        8 => GroupLabel::T8_11,
        4 => {
            if flags.swy {
                GroupLabel::Q8
            } else if flags.y {
                GroupLabel::D8
            } else if flags.w {
                notes.push(String::from("w rational: T = Pw Pw', two D4 quartics; the related octic is D8(8)"));
                GroupLabel::D4Quartic
            } else if flags.sw {
                notes.push(String::from("Psw and its conjugate are Murphy's twins"));
                GroupLabel::C4Twins
            } else {
                GroupLabel::C4xC2
            }
        }
        _ => {
            if w2 == y2 {
                notes.push(String::from("A = -(m+2)/2: dihedral parameter d = -2, related octics coincide"));
                return GroupLabel::V4;
            }
            if let Some(w) = perfect_square(&w2) {
                let pw = pw_from_w(params, &w);
                if pw.discriminant().map(|d| is_square(&d)).unwrap_or(false) {
                    notes.push(String::from("w rational and disc(Pw) a square"));
                    return GroupLabel::V4;
                }
            }
            notes.push(format!("[E:Q] = {deg_e}; no group label is derived from square tests"));
            GroupLabel::Degenerate(format!("degE={deg_e}"))
        }
    }
}

fn small_int(q: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if is_integer(q) {
        q.to_integer().to_i64()
    } else {
        None
    }
}

fn pw_from_w(params: &Params, w: &Rational) -> Poly<Rational> {
    dihedral_quartic(&params.m, &d_from_w(params, w)).expect("d nonzero")
}

/// Solves `w = (m-2)/d - d` together with `A = -m-2-d-(m-2)/d` for `d`.
fn d_from_w(params: &Params, w: &Rational) -> Rational {
    -(&params.a + &params.m + int(2) + w) / int(2)
}

pub fn classify(params: &Params) -> Result<Classification> {
    let (s2, w2, y2) = (params.s2(), params.w2(), params.y2());
    let flags = SquareFlags::of(&s2, &w2, &y2);
    let deg_e = multiquadratic_degree(&[s2.clone(), w2.clone(), y2.clone()]);
    let t_irreducible = !flags.s && !flags.w && !flags.sw;
    let psw_irreducible = flags.sw.then(|| !flags.s && y2 != zero());
    let mut notes = Vec::new();
    let group = label(params, &flags, deg_e, &mut notes);
    let (real, pairs) = signature(params)?;
    Ok(Classification {
        params: params.clone(),
        s2,
        w2,
        y2,
        square_flags: flags,
        deg_e,
        t_irreducible,
        psw_irreducible,
        group,
        signature: (real, pairs),
        totally_real: real == 8,
        notes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureRule {
    A,
    B,
    C,
    D,
    E,
    Washington,
    Numeric,
}

/// The literal case analysis of the signature theorem, when it applies.
pub fn signature_theorem(params: &Params) -> Result<Option<(SignatureRule, usize)>> {
    if params.regime() != Regime::Generic {
        return Ok(None);
    }
    let (m, a) = (&params.m, &params.a);
    let (s2, w2, y2) = (params.s2(), params.w2(), params.y2());
    if w2 == zero() || y2 == zero() {
        return Ok(None);
    }
    let neg = |q: &Rational| *q < zero();
    let pos = |q: &Rational| *q > zero();
    if neg(&s2) || neg(&w2) {
        return Ok(Some((SignatureRule::A, 0)));
    }
    if pos(&s2) && pos(&w2) && neg(&y2) {
        return Ok(Some((SignatureRule::B, 4)));
    }
    if *m < int(-2) {
        return Ok(Some((SignatureRule::C, 8)));
    }
    if *m > int(2) && pos(&w2) && pos(&y2) {
        let a4 = a + int(4);
        let v = &a4 * &a4 + m * a * &a4 + a * a;
        let v = if v < zero() { -v } else { v };
        return match v.cmp(&int(16)) {
            core::cmp::Ordering::Greater => Ok(Some((SignatureRule::D, 8))),
            core::cmp::Ordering::Less => Ok(Some((SignatureRule::E, 0))),
            core::cmp::Ordering::Equal => {
                Err(Error::Internal(format!("signature boundary |(A+4)^2 + mA(A+4) + A^2| = 16 at ({m}, {a})")))
            }
        };
    }
    Err(Error::Internal(format!("no signature case applies at ({m}, {a})")))
}

/// Real zeroes of `P_t` from `|t + 1|`.
pub fn sig2(t: &Rational) -> Result<usize> {
    let d = t + int(1);
    let d = if d < zero() { -d } else { d };
    match d.cmp(&int(1)) {
        core::cmp::Ordering::Greater => Ok(4),
        core::cmp::Ordering::Less => Ok(0),
        core::cmp::Ordering::Equal => Err(Error::Hypothesis(format!("|t + 1| = 1 at t = {t}"))),
    }
}

/// `(real zeroes, complex pairs)` of `T(m, A, x)`, with multiplicity.
pub fn signature(params: &Params) -> Result<(usize, usize)> {
    let (_, real) = signature_with_rule(params)?;
    Ok((real, (8 - real) / 2))
}

pub fn signature_with_rule(params: &Params) -> Result<(SignatureRule, usize)> {
    if let Some(r) = signature_theorem(params)? {
        return Ok(r);
    }
    if params.regime() == Regime::Generic {
        if let Some(t) = washington_t(params) {
            if t != zero() && t != int(-2) {
                return Ok((SignatureRule::Washington, 2 * sig2(&t)?));
            }
        }
    }
    Ok((SignatureRule::Numeric, real_root_count(&octic(params), DEFAULT_PRECISION)?))
}

/// `Pw` for `A = -m - 2 - d - (m-2)/d`, where `w = (m-2)/d - d`.
pub fn dihedral_quartic(m: &Rational, d: &Rational) -> Result<Poly<Rational>> {
    if *d == zero() {
        return Err(Error::InvalidArgument(String::from("d must be nonzero")));
    }
    Ok(Poly::new(vec![
        int(1),
        (d + int(1)) * m + int(2),
        (d + int(2)) * m + d * d + int(2) * d + int(2),
        m + int(2) * d + int(2),
        int(1),
    ]))
}

/// `(A, w)` of the dihedral parametrization.
pub fn dihedral_params(m: &Rational, d: &Rational) -> Result<(Rational, Rational)> {
    if *d == zero() {
        return Err(Error::InvalidArgument(String::from("d must be nonzero")));
    }
    let q = (m - int(2)) / d;
    Ok((-m - int(2) - d - &q, q - d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MostlyRealCase {
    /// `y w` is an integer.
    Yw { m: i64, a: i64 },
    /// `s w y` is an integer.
    Swy { m: i64, a: i64 },
    /// `d | m - 2` with `d^2 <= |m - 2|`.
    Divisor { m: i64, d: i64 },
    /// `s w` is an integer.
    Sw { m: i64, a: i64 },
}

fn nonzero_swy(m: i64, a: i64) -> Result<Params> {
    let p = Params::ints(m, a);
    if p.s2() * p.w2() * p.y2() == zero() {
        return Err(Error::Hypothesis(format!("s^2 w^2 y^2 = 0 at ({m}, {a})")));
    }
    Ok(p)
}

/// Whether the splitting field is totally real, by the theorem's exception lists.
pub fn totally_real_special(case: &MostlyRealCase) -> Result<bool> {
    match *case {
        MostlyRealCase::Yw { m, a } => {
            let p = nonzero_swy(m, a)?;
            if !is_square(&(p.w2() * p.y2())) {
                return Err(Error::Hypothesis(format!("y w is not an integer at ({m}, {a})")));
            }
            Ok(!matches!((m, a), (1, -4) | (1, 1) | (4, -3)))
        }
        MostlyRealCase::Swy { m, a } => {
            let p = nonzero_swy(m, a)?;
            if !is_square(&(p.s2() * p.w2() * p.y2())) {
                return Err(Error::Hypothesis(format!("s w y is not an integer at ({m}, {a})")));
            }
            Ok(true)
        }
        MostlyRealCase::Divisor { m, d } => {
            if d == 0 || (m - 2) % d != 0 || d * d > (m - 2).abs() {
                return Err(Error::Hypothesis(format!("need d | m - 2 and d^2 <= |m - 2| at (m, d) = ({m}, {d})")));
            }
            let a = -m - 2 - d - (m - 2) / d;
            nonzero_swy(m, a)?;
            let exception = matches!((m, d), (-1, 1) | (-1, -1) | (0, 1) | (0, -1) | (1, 1) | (1, -1) | (4, -1))
                || (d == -1 && m > 4);
            Ok(!exception)
        }
        MostlyRealCase::Sw { m, a } => {
            let p = nonzero_swy(m, a)?;
            if !is_square(&(p.s2() * p.w2())) {
                return Err(Error::Hypothesis(format!("s w is not an integer at ({m}, {a})")));
            }
            Ok(!matches!((m, a), (7, -4) | (7, 1)))
        }
    }
}
