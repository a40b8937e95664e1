//! Embeddings, units, Murphy's twins, field equality and regulators.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive};

use crate::classify::dihedral_quartic;
use crate::error::{Error, Result};
use crate::exact::{
    from_integer, fundamental_unit, int, integer_sqrt, is_integer, lucas_fib, perfect_square, rat, square_class,
    squarefree_check, zero, Integer, QuadUnit, Rational, Squarefree,
};
use crate::murphy::{build_bundle, octic, sigma_mod_t, Params};
use crate::numeric::{Complex, Real};
use crate::poly::resultant::multiplication_charpoly;
use crate::poly::{Poly, QuotientRing};
use crate::quadring::{BiquadElem, QuadCtx, QuadElem};

pub use crate::numeric::{complex_roots, real_root_count, EmbeddingSet, DEFAULT_PRECISION, MAX_PRECISION};

fn is_int_poly(p: &Poly<Rational>) -> bool {
    p.coeffs().iter().all(is_integer)
}

fn rational_is_zero(q: &Rational) -> bool {
    *q == zero()
}

fn eval_at(p: &Poly<Rational>, z: &Complex) -> Complex {
    let prec = z.re.precision();
    let cs: Vec<Complex> = p.coeffs().iter().map(|c| Complex::from_rational(c, prec)).collect();
    z.eval(&cs)
}

fn ln_abs(z: &Complex) -> Real {
    z.abs().ln()
}

fn tiny(bits: usize, prec: usize) -> Real {
    Real::pow2(-(bits as i32), prec)
}

// ---------------------------------------------------------------------------
// exact unit tests

/// `prod (x - g(r))` over the roots `r` of the monic `modulus`.
pub fn norm_charpoly(modulus: &Poly<Rational>, g: &Poly<Rational>) -> Result<Poly<Rational>> {
    multiplication_charpoly(modulus, g)
}

pub fn is_algebraic_integer(modulus: &Poly<Rational>, g: &Poly<Rational>) -> Result<bool> {
    Ok(is_int_poly(&norm_charpoly(modulus, g)?))
}

/// `g` is a unit of the integral closure: integral charpoly with constant term `+-1`.
pub fn is_unit(modulus: &Poly<Rational>, g: &Poly<Rational>) -> Result<bool> {
    let c = norm_charpoly(modulus, g)?;
    let c0 = c.coeff(0).cloned().unwrap_or_else(zero);
    Ok(is_int_poly(&c) && (c0 == int(1) || c0 == int(-1)))
}

/// `a / b` is a unit.
pub fn are_associates(modulus: &Poly<Rational>, a: &Poly<Rational>, b: &Poly<Rational>) -> Result<bool> {
    let ring = QuotientRing::new(modulus.clone())?;
    match ring.div(a, b) {
        Ok(q) => is_unit(modulus, &q),
        Err(_) => Ok(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
}

fn named(name: &str, pass: bool) -> NamedCheck {
    NamedCheck { name: String::from(name), pass }
}

#[derive(Clone, Debug)]
pub struct UnitReport {
    pub params: Params,
    pub t: Poly<Rational>,
    pub t_at_minus_one: Rational,
    pub checks: Vec<NamedCheck>,
    /// `r, r+1, r+u` are units with unit differences.
    pub exceptional_triple: bool,
    pub notes: Vec<String>,
}

impl UnitReport {
    pub fn identities_hold(&self) -> bool {
        self.checks.iter().filter(|c| !c.name.starts_with("unit:")).all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

/// Unit and exceptional-sequence checks for integer `(m, A)`.
pub fn unit_checks(params: &Params) -> Result<UnitReport> {
    if !is_integer(&params.m) || !is_integer(&params.a) {
        return Err(Error::InvalidArgument(String::from("unit checks need integer m and A")));
    }
    let m = &params.m;
    let t = octic(params);
    let tm1 = t.eval(&int(-1));
    let mm2 = m - int(2);
    let mut checks = vec![
        named("T monic with integer coefficients", t.is_monic() && is_int_poly(&t)),
        named("T(0) = 1", t.coeff(0) == Some(&int(1))),
        named("T(-1) = (m-2)^2", tm1 == &mm2 * &mm2),
    ];
    let mut notes = Vec::new();
    let ctx = QuadCtx::murphy(m);
    let u = QuadElem::gen(&ctx);
    let one = QuadElem::rational(int(1), &ctx);
    let um1 = u.clone() - one;
    checks.push(named(
        "(u-1)^2 = (m-2)u",
        um1.clone() * um1.clone() == u.clone() * QuadElem::rational(mm2.clone(), &ctx),
    ));
    let unit_m2 = mm2 == int(1) || mm2 == int(-1);
    checks.push(named("unit: u-1", unit_m2));
    if let Ok(b) = build_bundle(params) {
        let at = |p: &Poly<BiquadElem>| p.eval(&BiquadElem::rational(int(-1), &b.ctx)).as_rational();
        checks.push(named("Ps(-1) = m-2", at(&b.ps).as_ref() == Some(&mm2)));
        checks.push(named("conj Ps(-1) = m-2", at(&b.ps_bar).as_ref() == Some(&mm2)));
    }
    let mut triple = false;
    match sigma_mod_t(params) {
        Ok(sm) => {
            let x = Poly::x();
            let x1 = &x + &Poly::one();
            let xu = &x + &sm.u_expr;
            checks.push(named("r+1 ~ r+u", are_associates(&t, &x1, &xu)?));
            let ur = is_unit(&t, &x)?;
            let u1 = is_unit(&t, &x1)?;
            let uu = is_unit(&t, &xu)?;
            checks.push(named("unit: r", ur));
            checks.push(named("unit: r+1", u1));
            checks.push(named("unit: r+u", uu));
            let um1 = &sm.u_expr - &Poly::one();
            let diff = is_unit(&t, &um1)?;
            checks.push(named("unit: (r+u)-(r+1)", diff));
            triple = ur && u1 && uu && diff && is_unit(&t, &sm.u_expr)?;
        }
        Err(e) => notes.push(format!("u as an element of Q(r) unavailable: {e}")),
    }
    Ok(UnitReport { params: params.clone(), t, t_at_minus_one: tm1, checks, exceptional_triple: triple, notes })
}

#[derive(Clone, Debug)]
pub struct ConstellationReport {
    pub m: Rational,
    pub d: Rational,
    pub a: Rational,
    pub pw: Poly<Rational>,
    pub pw_at_minus_one: Rational,
    pub checks: Vec<NamedCheck>,
    /// All five of `r, r+1, r+1+d, r+u, r+1+d+u` are units.
    pub all_units: bool,
}

impl ConstellationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `u = -x (x + 1 + d)/(x + 1)` modulo the dihedral quartic.
pub fn dihedral_u(m: &Rational, d: &Rational) -> Result<(Poly<Rational>, Poly<Rational>)> {
    let pw = dihedral_quartic(m, d)?;
    let ring = QuotientRing::new(pw.clone())?;
    let x = Poly::<Rational>::x();
    let num = -(&x * &(&x + &Poly::constant(int(1) + d)));
    let u = ring.div(&num, &(&x + &Poly::one()))?;
    Ok((pw, u))
}

/// Associates and units attached to a root of `P_w` with `d | m - 2`.
pub fn constellation_check(m: &Rational, d: &Rational) -> Result<ConstellationReport> {
    if !is_integer(m) || !is_integer(d) || rational_is_zero(d) {
        return Err(Error::InvalidArgument(String::from("m and nonzero d must be integers")));
    }
    if !is_integer(&((m - int(2)) / d)) {
        return Err(Error::Hypothesis(format!("d={d} does not divide m-2")));
    }
    let a = -m - int(2) - d - (m - int(2)) / d;
    let (pw, u) = dihedral_u(m, d)?;
    let ring = QuotientRing::new(pw.clone())?;
    let pm1 = pw.eval(&int(-1));
    let x = Poly::<Rational>::x();
    let c = |q: Rational| Poly::constant(q);
    let r1 = &x + &c(int(1));
    let ru = &x + &u;
    let r1d = &x + &c(int(1) + d);
    let r1du = &r1d + &u;
    let mut checks = vec![
        named("Pw(-1) = d^2", pm1 == d * d),
        named("u^2 - m u + 1 = 0", ring.is_zero(&(&(&ring.mul(&u, &u) - &u.scale(m)) + &Poly::one()))),
        named("Pw divides T", octic(&Params::new(m.clone(), a.clone())).rem(&pw)?.is_zero()),
        named("r+1 ~ r+u", are_associates(&pw, &r1, &ru)?),
        named("r+u ~ r+1+d", are_associates(&pw, &ru, &r1d)?),
        named("r ~ r+1+d+u", are_associates(&pw, &x, &r1du)?),
        named("r ~ 1", is_unit(&pw, &x)?),
    ];
    let d_unit = *d == int(1) || *d == int(-1);
    let mut all_units = true;
    for (name, e) in
        [("unit: r", &x), ("unit: r+1", &r1), ("unit: r+1+d", &r1d), ("unit: r+u", &ru), ("unit: r+1+d+u", &r1du)]
    {
        let pass = is_unit(&pw, e)?;
        all_units &= pass;
        if d_unit {
            checks.push(named(name, pass));
        }
    }
    Ok(ConstellationReport { m: m.clone(), d: d.clone(), a, pw, pw_at_minus_one: pm1, checks, all_units })
}

// ---------------------------------------------------------------------------
// twins

/// `(x + y sqrt d)/2`.
#[derive(Clone, Debug, PartialEq)]
struct Half {
    x: Rational,
    y: Rational,
}

impl Half {
    fn of(u: &QuadUnit) -> Half {
        Half { x: from_integer(&u.x), y: from_integer(&u.y) }
    }

    fn mul(&self, o: &Half, d: &Rational) -> Half {
        Half { x: (&self.x * &o.x + d * &self.y * &o.y) / int(2), y: (&self.x * &o.y + &o.x * &self.y) / int(2) }
    }

    fn scale(&self, q: &Rational) -> Half {
        Half { x: &self.x * q, y: &self.y * q }
    }

    fn in_order(&self, d: &Integer) -> bool {
        if !is_integer(&self.x) || !is_integer(&self.y) {
            return false;
        }
        let (p, q) = (self.x.to_integer(), self.y.to_integer());
        if d.mod_floor(&Integer::from(4)) == Integer::one() {
            (p - q).is_even()
        } else {
            p.is_even() && q.is_even()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinFamily {
    /// `A = -5 + L_2j`.
    Sw1,
    /// `A = -5 - L_2j`.
    Sw2,
    /// Fundamental unit of norm `-1`.
    NormMinusOne { k: i64, sign: i8 },
    /// Fundamental unit of norm `+1`, `u = +-eps^n`.
    NormPlusOne { n: i64, sign: i8 },
}

#[derive(Clone, Debug)]
pub struct TwinPair {
    pub family: TwinFamily,
    pub j: i64,
    pub m: Rational,
    pub a: Rational,
    pub sw: Rational,
    pub psw: Poly<Rational>,
    pub psw_bar: Poly<Rational>,
    /// `Some(reason)` when `y^2 = 0` or `w^2 = 0`.
    pub degenerate: Option<&'static str>,
}

impl TwinPair {
    pub fn params(&self) -> Params {
        Params::new(self.m.clone(), self.a.clone())
    }

    pub fn invariant_holds(&self) -> bool {
        let p = self.params();
        let quartic = |q: &Poly<Rational>| q.degree() == Some(4) && q.is_monic() && q.coeff(0) == Some(&int(1));
        &self.psw * &self.psw_bar == octic(&p)
            && quartic(&self.psw)
            && quartic(&self.psw_bar)
            && &self.sw * &self.sw == p.s2() * p.w2()
    }
}

fn degenerate_flag(p: &Params) -> Option<&'static str> {
    if rational_is_zero(&p.y2()) {
        Some("y^2 = 0")
    } else if rational_is_zero(&p.w2()) {
        Some("w^2 = 0")
    } else {
        None
    }
}

/// `d = a^2 + b^2` with `0 < a <= b`, all decompositions.
pub fn two_square_decompositions(d: &Integer) -> Vec<(Integer, Integer)> {
    let mut out = Vec::new();
    let mut a = Integer::one();
    while &a * &a * 2 <= *d {
        let rest = d - &a * &a;
        if let Some(b) = integer_sqrt(&rest) {
            out.push((a.clone(), b));
        }
        a += 1;
    }
    out
}

fn lf5(n: i64) -> (Rational, Rational) {
    let lf = lucas_fib(&Integer::from(5), n).expect("5 is squarefree");
    (from_integer(&lf.l), from_integer(&lf.f))
}

/// The explicit `d = 5`, `m = 3` twins.
pub fn golden_twins(family: TwinFamily, j: i64) -> Result<TwinPair> {
    let (l2j, f2j) = lf5(2 * j);
    let (lm, _) = lf5(2 * j - 2);
    let (lp, _) = lf5(2 * j + 2);
    let (_, fm) = lf5(2 * j - 1);
    let (_, fp) = lf5(2 * j + 1);
    let q = |c1: Rational, c2: Rational, c3: Rational| Poly::new(vec![int(1), c1, c2, c3, int(1)]);
    let five = int(5);
    let nine = int(9);
    let (a, psw, psw_bar) = match family {
        TwinFamily::Sw1 => (
            int(-5) + &l2j,
            q(&five - &lm, &nine - &five * &fm, &five - &l2j),
            q(&five - &lp, &nine - &five * &fp, &five - &l2j),
        ),
        TwinFamily::Sw2 => (
            int(-5) - &l2j,
            q(&five + &lp, &nine + &five * &fp, &five + &l2j),
            q(&five + &lm, &nine + &five * &fm, &five + &l2j),
        ),
        _ => return Err(Error::InvalidArgument(String::from("golden twins are Sw1 or Sw2"))),
    };
    let params = Params::new(int(3), a.clone());
    let pair = TwinPair { family, j, m: int(3), a, sw: five * f2j, psw, psw_bar, degenerate: degenerate_flag(&params) };
    if !pair.invariant_holds() {
        return Err(Error::Internal(format!("twin product differs from T at j={j}")));
    }
    Ok(pair)
}

fn twin_from_params(family: TwinFamily, j: i64, params: Params) -> Result<TwinPair> {
    let b = build_bundle(&params)?;
    let (psw, psw_bar) = b.twins().ok_or_else(|| Error::Internal(String::from("s w is not rational")))?;
    let sw = perfect_square(&(params.s2() * params.w2())).unwrap_or_else(zero);
    let pair = TwinPair { family, j, degenerate: degenerate_flag(&params), m: params.m, a: params.a, sw, psw, psw_bar };
    if !pair.invariant_holds() {
        return Err(Error::Internal(String::from("twin product differs from T")));
    }
    Ok(pair)
}

fn check_twin_radicand(d: &Integer) -> Result<Vec<(Integer, Integer)>> {
    if *d <= Integer::one() {
        return Err(Error::InvalidArgument(format!("d={d} must exceed 1")));
    }
    if squarefree_check(d) == Squarefree::No {
        return Err(Error::NotSquarefree(d.clone()));
    }
    let reps = two_square_decompositions(d);
    if reps.is_empty() {
        return Err(Error::NotSumOfTwoSquares(d.clone()));
    }
    Ok(reps)
}

/// Murphy's twins with quadratic subfield `Q(sqrt d)`.
///
/// `d = 5` uses the golden-ratio formulas (both families); other `d` use the
/// norm construction with the smallest admissible `m`.
pub fn twins_enumerate(d: &Integer, js: RangeInclusive<i64>) -> Result<Vec<TwinPair>> {
    check_twin_radicand(d)?;
    if *d == Integer::from(5) {
        let mut out = Vec::new();
        for j in js {
            out.push(golden_twins(TwinFamily::Sw1, j)?);
            out.push(golden_twins(TwinFamily::Sw2, j)?);
        }
        return Ok(out);
    }
    twins_by_norm(d, js)
}

/// The norm construction for any admissible `d`.
pub fn twins_by_norm(d: &Integer, js: RangeInclusive<i64>) -> Result<Vec<TwinPair>> {
    let reps = check_twin_radicand(d)?;
    let eps = fundamental_unit(d)?;
    let dq = from_integer(d);
    let mut out = Vec::new();
    if eps.norm == -1 {
        let k = 1;
        let e2k = Half::of(&eps.pow(2 * k));
        let base = Half { x: &e2k.x - int(2), y: e2k.y.clone() };
        let m = e2k.x.clone();
        for j in js {
            let h = base.mul(&Half::of(&eps.pow(2 * j - 1)), &dq);
            push_signs(&mut out, &m, &h, j, |sign| TwinFamily::NormMinusOne { k, sign })?;
        }
        return Ok(out);
    }
    let (a, b, n, sign, u) = norm_plus_choice(&eps, &reps, d)?;
    let m = u.x.clone();
    let um1 = Half { x: &u.x - int(2), y: u.y.clone() }.scale(&Rational::new(Integer::one(), a.clone()));
    let bd = Half { x: from_integer(&(b * 2)), y: int(-2) };
    let base = um1.mul(&bd, &dq);
    for j in js {
        let h = base.mul(&Half::of(&eps.pow(j)), &dq);
        push_signs(&mut out, &m, &h, j, |s| TwinFamily::NormPlusOne { n, sign: sign * s })?;
    }
    Ok(out)
}

fn norm_plus_choice(
    eps: &QuadUnit,
    reps: &[(Integer, Integer)],
    d: &Integer,
) -> Result<(Integer, Integer, i64, i8, Half)> {
    for (p, q) in reps {
        for (a, b) in [(p, q), (q, p)] {
            let inv = Rational::new(Integer::one(), a.clone());
            for n in 1..=(4 * a.to_i64().unwrap_or(1000).pow(2) + 8) {
                for sign in [1i8, -1] {
                    let h = Half::of(&eps.pow(n)).scale(&int(sign as i64));
                    let um1 = Half { x: &h.x - int(2), y: h.y.clone() }.scale(&inv);
                    if um1.in_order(d) && h.x.abs() > int(2) {
                        return Ok((a.clone(), b.clone(), n, sign, h));
                    }
                }
            }
        }
    }
    Err(Error::IterationCap(reps.len()))
}

fn push_signs(out: &mut Vec<TwinPair>, m: &Rational, h: &Half, j: i64, fam: impl Fn(i8) -> TwinFamily) -> Result<()> {
    let x = &h.x;
    if !is_integer(x) || !is_integer(&h.y) {
        return Err(Error::Internal(String::from("X + Y sqrt d is not integral")));
    }
    for sign in [1i8, -1] {
        let a = -m - int(2) + x * int(sign as i64);
        out.push(twin_from_params(fam(sign), j, Params::new(m.clone(), a))?);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// linear algebra and root pairings

fn invert(mut a: Vec<Vec<Complex>>) -> Option<Vec<Vec<Complex>>> {
    let n = a.len();
    let prec = a[0][0].re.precision();
    let mut inv: Vec<Vec<Complex>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Complex::one(prec) } else { Complex::zero(prec) }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap_or(core::cmp::Ordering::Equal))?;
        if a[piv][col].is_zero() {
            return None;
        }
        a.swap(col, piv);
        inv.swap(col, piv);
        let pr = a[col][col].recip();
        for k in 0..n {
            a[col][k] = &a[col][k] * &pr;
            inv[col][k] = &inv[col][k] * &pr;
        }
        for i in 0..n {
            if i == col {
                continue;
            }
            let f = a[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for k in 0..n {
                a[i][k] = &a[i][k] - &(&f * &a[col][k]);
                inv[i][k] = &inv[i][k] - &(&f * &inv[col][k]);
            }
        }
    }
    Some(inv)
}

/// Index of the complex conjugate of each root in an [`EmbeddingSet`].
fn partners(e: &EmbeddingSet) -> Vec<usize> {
    (0..e.roots.len())
        .map(|i| {
            if i < e.real_count {
                i
            } else if (i - e.real_count) % 2 == 0 {
                i + 1
            } else {
                i - 1
            }
        })
        .collect()
}

enum Look {
    Rational(Poly<Rational>),
    Irrational,
    Ambiguous,
}

fn classify_coeffs(c: &[Complex], prec: usize) -> Look {
    let cap = Integer::one() << (prec / 4);
    let strict = tiny(3 * prec / 4, c[0].re.precision());
    let mut out = Vec::with_capacity(c.len());
    let mut ambiguous = false;
    for z in c {
        let q = match crate::numeric::reconstruct_rational(&z.re, &cap) {
            Some(q) => q,
            None => return Look::Irrational,
        };
        if (&z.re - &Real::from_rational(&q, z.re.precision())).abs() > strict {
            return Look::Irrational;
        }
        ambiguous |= z.im.abs() > strict;
        out.push(q);
    }
    if ambiguous {
        Look::Ambiguous
    } else {
        Look::Rational(Poly::new(out))
    }
}

struct PairingSearch {
    tried: usize,
    ambiguous: usize,
    found: Option<Poly<Rational>>,
}

/// Searches for `theta` in `Q[x]/(p)` with `q(theta) = 0` by assigning a root
/// of `q` to every root of `p`, compatibly with complex conjugation.
fn pairing_search(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    prec: usize,
    bijective: bool,
    fix_first: bool,
) -> Result<PairingSearch> {
    let wp = 2 * prec;
    let ep = complex_roots(p, wp)?;
    let eq = complex_roots(q, wp)?;
    let wp = ep.precision.max(eq.precision);
    let rp: Vec<Complex> = ep.centers().iter().map(|c| c.with_precision(wp)).collect();
    let rq: Vec<Complex> = eq.centers().iter().map(|c| c.with_precision(wp)).collect();
    let n = rp.len();
    let vander: Vec<Vec<Complex>> = rp
        .iter()
        .map(|z| {
            let mut row = Vec::with_capacity(n);
            let mut acc = Complex::one(wp);
            for _ in 0..n {
                row.push(acc.clone());
                acc = &acc * z;
            }
            row
        })
        .collect();
    let vinv = invert(vander).ok_or(Error::RepeatedRoots)?;
    let pp = partners(&ep);
    let pq = partners(&eq);
    let ring = QuotientRing::new(p.clone())?;
    let places: Vec<usize> = (0..n).filter(|&i| pp[i] >= i).collect();
    let mut search = PairingSearch { tried: 0, ambiguous: 0, found: None };
    let mut assign: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; rq.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        places: &[usize],
        pp: &[usize],
        pq: &[usize],
        ep_real: usize,
        eq_real: usize,
        bijective: bool,
        fix_first: bool,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
    ) -> bool {
        if k == places.len() {
            return visit(assign);
        }
        let i = places[k];
        let real_place = i < ep_real;
        let choices: Vec<usize> = if real_place { (0..eq_real).collect() } else { (0..pq.len()).collect() };
        for c in choices {
            if fix_first && k == 0 && c != first_choice(real_place, eq_real, pq.len()) {
                continue;
            }
            let partner = pq[c];
            if bijective && (used[c] || (!real_place && (used[partner] || partner == c))) {
                continue;
            }
            assign[i] = Some(c);
            assign[pp[i]] = Some(partner);
            used[c] = true;
            used[partner] = true;
            let stop = rec(k + 1, places, pp, pq, ep_real, eq_real, bijective, fix_first, assign, used, visit);
            used[c] = false;
            used[partner] = false;
            assign[i] = None;
            assign[pp[i]] = None;
            if stop {
                return true;
            }
        }
        false
    }
    fn first_choice(real_place: bool, eq_real: usize, total: usize) -> usize {
        if real_place || eq_real == total {
            0
        } else {
            eq_real
        }
    }
    let mut visit = |a: &[Option<usize>]| -> bool {
        search.tried += 1;
        let b: Vec<&Complex> = a.iter().map(|c| &rq[c.expect("complete assignment")]).collect();
        let coeffs: Vec<Complex> = (0..n)
            .map(|j| {
                let mut acc = Complex::zero(wp);
                for (i, bi) in b.iter().enumerate() {
                    acc = &acc + &(&vinv[j][i] * bi);
                }
                acc
            })
            .collect();
        match classify_coeffs(&coeffs, prec) {
            Look::Irrational => false,
            Look::Ambiguous => {
                search.ambiguous += 1;
                false
            }
            Look::Rational(theta) => {
                if ring.is_zero(&ring.compose(q, &theta)) {
                    search.found = Some(theta);
                    true
                } else {
                    search.ambiguous += 1;
                    false
                }
            }
        }
    };
    rec(0, &places, &pp, &pq, ep.real_count, eq.real_count, bijective, fix_first, &mut assign, &mut used, &mut visit);
    Ok(search)
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldRelation {
    /// `q(theta) = 0` modulo `p`, verified exactly.
    Same { theta: Poly<Rational>, precision: usize, denominator_cap_bits: usize },
    /// No pairing produced a rational solution.
    Different { precision: usize, pairings: usize, denominator_cap_bits: usize },
}

impl FieldRelation {
    pub fn is_same(&self) -> bool {
        matches!(self, FieldRelation::Same { .. })
    }
}

/// Whether `Q[x]/(p)` and `Q[x]/(q)` are the same field, for irreducible
/// polynomials of equal degree.
///
/// Candidates come from solving the Vandermonde system for each root pairing
/// and reconstructing rationals with denominators below `2^(precision/4)`.
/// Every `Same` answer is verified exactly; ambiguity at the precision
/// ceiling is an `Indeterminate` error.
pub fn same_field_check(p: &Poly<Rational>, q: &Poly<Rational>, precision: usize) -> Result<FieldRelation> {
    if p.degree() != q.degree() {
        return Ok(FieldRelation::Different { precision, pairings: 0, denominator_cap_bits: precision / 4 });
    }
    let p = p.monic();
    let q = q.monic();
    let mut prec = precision.max(64);
    loop {
        let s = pairing_search(&p, &q, prec, true, false)?;
        if let Some(theta) = s.found {
            return Ok(FieldRelation::Same { theta, precision: prec, denominator_cap_bits: prec / 4 });
        }
        if s.ambiguous == 0 {
            return Ok(FieldRelation::Different { precision: prec, pairings: s.tried, denominator_cap_bits: prec / 4 });
        }
        if prec * 2 > MAX_PRECISION / 2 {
            return Err(Error::Indeterminate { bits: prec });
        }
        prec *= 2;
    }
}

/// A root of `q` inside `Q[x]/(p)`, if one exists.
pub fn root_in_field(p: &Poly<Rational>, q: &Poly<Rational>, precision: usize) -> Result<Option<Poly<Rational>>> {
    let mut prec = precision.max(64);
    loop {
        let s = pairing_search(&p.monic(), &q.monic(), prec, false, false)?;
        if s.found.is_some() || s.ambiguous == 0 {
            return Ok(s.found);
        }
        if prec * 2 > MAX_PRECISION / 2 {
            return Err(Error::Indeterminate { bits: prec });
        }
        prec *= 2;
    }
}

/// `Phi_k`.
pub fn cyclotomic(k: u32) -> Poly<Rational> {
    let mut num = Poly::monomial(int(1), k as usize) - Poly::one();
    for d in 1..k {
        if k % d == 0 {
            num = num.exact_quotient(&cyclotomic(d)).expect("cyclotomic division");
        }
    }
    num
}

pub fn euler_phi(k: u32) -> u32 {
    (1..=k).filter(|&j| j.gcd(&k) == 1).count() as u32
}

/// Order of the group of roots of unity in `Q[x]/(p)`, `p` irreducible.
///
/// Prime powers `q <= 60` with `phi(q) | deg p` are tested; a root of `Phi_q`
/// is found numerically and then verified exactly.
pub fn torsion_order(p: &Poly<Rational>, precision: usize) -> Result<u32> {
    let n = p.degree().unwrap_or(0) as u32;
    let e = complex_roots(&p.monic(), precision)?;
    if e.real_count > 0 || n == 0 {
        return Ok(2);
    }
    let mut w = 2u32;
    for q in 3..=60u32 {
        let f = prime_power_base(q);
        if f.is_none() || n % euler_phi(q) != 0 || w % q == 0 {
            continue;
        }
        let mut prec = precision.max(64);
        let found = loop {
            let s = pairing_search(&p.monic(), &cyclotomic(q), prec, false, true)?;
            if s.found.is_some() || s.ambiguous == 0 {
                break s.found.is_some();
            }
            if prec * 2 > MAX_PRECISION / 2 {
                return Err(Error::Indeterminate { bits: prec });
            }
            prec *= 2;
        };
        if found {
            w = w.lcm(&q);
        }
    }
    Ok(w)
}

fn prime_power_base(q: u32) -> Option<u32> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    (r == 1).then_some(p)
}

/// Irreducibility over `Q` of a monic integer polynomial of degree at most 8.
///
/// Each subset of at most half the roots is tested as a factor; a numerically
/// integral candidate is confirmed by exact division.
pub fn is_irreducible(p: &Poly<Rational>, precision: usize) -> Result<bool> {
    if !p.is_monic() || !is_int_poly(p) {
        return Err(Error::InvalidArgument(String::from("expected a monic integer polynomial")));
    }
    let n = p.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(n == 1);
    }
    if !p.is_squarefree()? {
        return Ok(false);
    }
    let e = complex_roots(p, precision)?;
    let roots = e.centers();
    let prec = e.precision;
    let loose = tiny(prec / 2, prec);
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k > n / 2 {
            continue;
        }
        let mut f = vec![Complex::one(prec)];
        for (i, z) in roots.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let mut g = vec![Complex::zero(prec); f.len() + 1];
            for (j, c) in f.iter().enumerate() {
                g[j + 1] = &g[j + 1] + c;
                g[j] = &g[j] - &(c * z);
            }
            f = g;
        }
        let mut coeffs = Vec::with_capacity(f.len());
        let mut integral = true;
        for c in &f {
            let r = c.re.round_integer();
            match r {
                Some(r) if c.im.abs() < loose && (&c.re - &Real::from_integer(&r, prec)).abs() < loose => {
                    coeffs.push(from_integer(&r))
                }
                _ => {
                    integral = false;
                    break;
                }
            }
        }
        if integral && Poly::new(coeffs).divides(p) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// regulators

/// Archimedean places of `Q[x]/(p)` with weights 1 (real) or 2 (complex).
#[derive(Clone, Debug)]
pub struct Places {
    pub field: Poly<Rational>,
    pub precision: usize,
    pub points: Vec<(Complex, u32)>,
    pub real_count: usize,
}

impl Places {
    pub fn new(field: &Poly<Rational>, precision: usize) -> Result<Places> {
        let e = complex_roots(field, precision)?;
        let mut points: Vec<(Complex, u32)> = e.real_roots().into_iter().map(|r| (Complex::real(r), 1)).collect();
        points.extend(e.places().into_iter().skip(e.real_count).map(|z| (z, 2)));
        Ok(Places { field: field.clone(), precision: e.precision, points, real_count: e.real_count })
    }

    /// `w_i ln|g(r_i)|`, one row per place.
    pub fn log_matrix(&self, units: &[Poly<Rational>]) -> Vec<Vec<Real>> {
        self.points
            .iter()
            .map(|(z, w)| {
                let wr = Real::from_i64(*w as i64, self.precision);
                units.iter().map(|g| &wr * &ln_abs(&eval_at(g, z))).collect()
            })
            .collect()
    }

    /// `|det|` of the square minors obtained by deleting each place in turn.
    pub fn regulator_minors(&self, units: &[Poly<Rational>]) -> Result<Vec<Real>> {
        let rows = self.log_matrix(units);
        if rows.len() != units.len() + 1 || units.len() != 3 {
            return Err(Error::Hypothesis(format!(
                "unit rank is {} but {} units were given",
                rows.len().saturating_sub(1),
                units.len()
            )));
        }
        Ok((0..rows.len())
            .map(|skip| {
                let m: Vec<&Vec<Real>> = rows.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, r)| r).collect();
                det3(&m).abs()
            })
            .collect())
    }
}

fn det3(m: &[&Vec<Real>]) -> Real {
    let t = |i: usize, j: usize, k: usize| &(&m[0][i] * &m[1][j]) * &m[2][k];
    let pos = &(&t(0, 1, 2) + &t(1, 2, 0)) + &t(2, 0, 1);
    let neg = &(&t(2, 1, 0) + &t(0, 2, 1)) + &t(1, 0, 2);
    &pos - &neg
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegulatorCase {
    ImagM01,
    ImagMgt2,
    TwinReal,
    DihedralReal,
}

impl RegulatorCase {
    pub const ALL: [RegulatorCase; 4] =
        [RegulatorCase::ImagM01, RegulatorCase::ImagMgt2, RegulatorCase::TwinReal, RegulatorCase::DihedralReal];

    pub fn label(self) -> &'static str {
        match self {
            RegulatorCase::ImagM01 => "imag_m01",
            RegulatorCase::ImagMgt2 => "imag_mgt2",
            RegulatorCase::TwinReal => "twin_real",
            RegulatorCase::DihedralReal => "dihedral_real",
        }
    }

    pub fn parse(s: &str) -> Option<RegulatorCase> {
        RegulatorCase::ALL.into_iter().find(|c| c.label() == s)
    }
}

/// `Reg<zeta, eps, r, r+1>` next to `Reg<zeta, eps, r, sigma(r)>`.
#[derive(Clone, Debug)]
pub struct IndexReport {
    /// `q1(-1) = +-1` or `m - 2 = +-1`.
    pub predicted_two: bool,
    pub det_r_plus_one: Real,
    pub ratio: Real,
    pub halves: bool,
}

#[derive(Clone, Debug)]
pub struct RegulatorReport {
    pub case: RegulatorCase,
    pub params: Params,
    pub d: Option<Rational>,
    pub field_poly: Poly<Rational>,
    pub unit_system: String,
    pub torsion: u32,
    pub fundamental_unit: QuadUnit,
    pub precision: usize,
    pub log_matrix_det: Real,
    /// Largest difference between the minors from deleting different places.
    pub minor_spread: Real,
    pub closed_form: Real,
    /// Largest difference of the closed form between conjugate roots.
    pub closed_form_spread: Real,
    /// Absolute for the exact cases, relative for `DihedralReal`.
    pub tolerance: Real,
    pub matches: bool,
    pub index: Option<IndexReport>,
}

impl RegulatorReport {
    pub fn relative_error(&self) -> Real {
        (&(&self.log_matrix_det - &self.closed_form) / &self.closed_form).abs()
    }
}

fn excluded(params: &Params, list: &[(i64, i64)]) -> bool {
    list.iter().any(|&(m, a)| *params == Params::ints(m, a))
}

struct QuadraticUnit {
    eps: QuadUnit,
    /// `eps` as an element of the field.
    element: Poly<Rational>,
    ln: Real,
}

/// `eps = (x + y root/N)/2` where `root^2 = core N^2`.
fn quadratic_unit(
    root: &Poly<Rational>,
    square: &Rational,
    modulus: &Poly<Rational>,
    prec: usize,
) -> Result<QuadraticUnit> {
    let (core, n) =
        square_class(square).ok_or_else(|| Error::Hypothesis(String::from("quadratic subfield radicand is zero")))?;
    if core <= Integer::one() {
        return Err(Error::Hypothesis(format!("{square} does not give a real quadratic field")));
    }
    let eps = fundamental_unit(&core)?;
    let (c0, c1) = eps.scaled_coefficients(&n);
    let element = (&root.scale(&c1) + &Poly::constant(c0)).rem(modulus)?;
    let x = Real::from_integer(&eps.x, prec);
    let y = Real::from_integer(&eps.y, prec);
    let sd = Real::from_integer(&core, prec).sqrt();
    let ln = (&(&x + &(&y * &sd)) / &Real::from_i64(2, prec)).ln();
    Ok(QuadraticUnit { eps, element, ln })
}

struct FieldData {
    field: Poly<Rational>,
    u: Poly<Rational>,
    sigma: Poly<Rational>,
    w: Option<Poly<Rational>>,
}

fn field_data_t(params: &Params, field: &Poly<Rational>) -> Result<FieldData> {
    let sm = sigma_mod_t(params)?;
    Ok(FieldData {
        field: field.clone(),
        u: sm.u_expr.rem(field)?,
        sigma: sm.sigma.rem(field)?,
        w: sm.w_expr.map(|w| w.rem(field)).transpose()?,
    })
}

fn field_data_dihedral(m: &Rational, d: &Rational) -> Result<FieldData> {
    let (pw, u) = dihedral_u(m, d)?;
    let ring = QuotientRing::new(pw.clone())?;
    let x = Poly::<Rational>::x();
    let sigma = ring.div(&-(&x + &Poly::one()), &(&x + &u))?;
    if !ring.is_zero(&ring.compose(&octic(&Params::new(m.clone(), -m - int(2) - d - (m - int(2)) / d)), &sigma)) {
        return Err(Error::Internal(String::from("sigma(r) is not a root of T")));
    }
    Ok(FieldData { field: pw, u, sigma, w: None })
}

/// The integer `d` with `A = -m - 2 - d - (m-2)/d`, `d^2 <= |m-2|`, `d != -1`.
pub fn dihedral_d(params: &Params) -> Result<Rational> {
    let b = &params.m + int(2) + &params.a;
    let w = perfect_square(&params.w2()).ok_or_else(|| Error::Hypothesis(String::from("w is not rational")))?;
    let mm2 = &params.m - int(2);
    for cand in [(-&b + &w) / int(2), (-&b - &w) / int(2)] {
        if !is_integer(&cand) || rational_is_zero(&cand) || cand == int(-1) {
            continue;
        }
        if is_integer(&(&mm2 / &cand)) && &cand * &cand <= mm2.abs() {
            return Ok(cand);
        }
    }
    Err(Error::Hypothesis(String::from("no admissible d with d | m-2, d != -1, d^2 <= |m-2|")))
}

fn closed_form_at(
    case: RegulatorCase,
    z: &Complex,
    fd: &FieldData,
    ln_eps: &Real,
    params: &Params,
    d: Option<&Rational>,
    prec: usize,
) -> Real {
    let r = z;
    let sr = eval_at(&fd.sigma, z);
    let sq = |x: Real| &x * &x;
    match case {
        RegulatorCase::ImagM01 => {
            let v = &sq(ln_abs(r)) + &sq(ln_abs(&sr));
            &(&Real::from_i64(16, prec) * ln_eps) * &v
        }
        RegulatorCase::ImagMgt2 | RegulatorCase::TwinReal => {
            let u = eval_at(&fd.u, z);
            let a = &(r * r) / &u;
            let b = &(&sr * &sr) * &u;
            let v = &sq(ln_abs(&a)) + &sq(ln_abs(&b));
            let c = if case == RegulatorCase::ImagMgt2 {
                Real::from_i64(4, prec)
            } else {
                Real::from_rational(&rat(1, 2), prec)
            };
            &(&c * ln_eps) * &v
        }
        RegulatorCase::DihedralReal => {
            let d = d.expect("dihedral d");
            let lnq = |q: &Rational| Real::from_rational(&q.abs(), prec).ln();
            let lm = lnq(&(&params.m - int(2)));
            let dp1 = d + int(1);
            let t = &(&sq(lm.clone()) + &(&lnq(&(&dp1 * &dp1 / d)) * &lm)) - &(&lnq(d) * &lnq(&dp1));
            &(&Real::from_i64(2, prec) * ln_eps) * &t.abs()
        }
    }
}

fn max_spread(xs: &[Real]) -> Real {
    let mut best = Real::zero(xs[0].precision());
    for x in xs {
        best = best.max(&(x - &xs[0]).abs());
    }
    best
}

/// Direct log-determinant of `<zeta, eps, r, sigma(r)>` and its closed form.
pub fn regulator(case: RegulatorCase, params: &Params, precision: usize) -> Result<RegulatorReport> {
    if !is_integer(&params.m) || !is_integer(&params.a) {
        return Err(Error::Hypothesis(String::from("m and A must be integers")));
    }
    let m = &params.m;
    let mut d = None;
    let (fd, root, square, system) = match case {
        RegulatorCase::ImagM01 => {
            if !(int(-1) <= *m && *m <= int(1)) {
                return Err(Error::Hypothesis(String::from("m must be -1, 0 or 1")));
            }
            if excluded(params, &[(-1, -3), (-1, 1), (0, -3), (0, -1), (1, -3)]) {
                return Err(Error::Hypothesis(String::from("excluded parameter pair")));
            }
            let t = octic(params);
            let fd = field_data_t(params, &t)?;
            let w = fd.w.clone().ok_or_else(|| Error::Hypothesis(String::from("w is not in Q(r)")))?;
            (fd, w, params.w2(), "<zeta, eps, r, sigma(r)>, eps from Q(w)")
        }
        RegulatorCase::ImagMgt2 => {
            let b = m + int(2) + &params.a;
            if *m <= int(2) || &b * &b >= int(4) * (m - int(2)) {
                return Err(Error::Hypothesis(String::from("need m > 2 and (m+2+A)^2 < 4(m-2)")));
            }
            let t = octic(params);
            let fd = field_data_t(params, &t)?;
            let s = (&fd.u.scale(&int(2)) - &Poly::constant(m.clone())).rem(&t)?;
            (fd, s, params.s2(), "<zeta, eps, r, sigma(r)>, eps from Q(s)")
        }
        RegulatorCase::TwinReal => {
            if m.abs() <= int(2) {
                return Err(Error::Hypothesis(String::from("need |m| > 2")));
            }
            if excluded(params, &[(3, -2), (3, -3)]) {
                return Err(Error::Hypothesis(String::from("excluded parameter pair")));
            }
            let b = build_bundle(params)?;
            let (p1, p2) = b.twins().ok_or_else(|| Error::Hypothesis(String::from("s w is not rational")))?;
            let mut chosen = None;
            for f in [p1, p2] {
                if is_irreducible(&f, precision)? && real_root_count(&f, precision)? == 4 {
                    chosen = Some(f);
                    break;
                }
            }
            let f = chosen.ok_or_else(|| Error::Hypothesis(String::from("no real irreducible twin")))?;
            let fd = field_data_t(params, &f)?;
            let s = (&fd.u.scale(&int(2)) - &Poly::constant(m.clone())).rem(&f)?;
            (fd, s, params.s2(), "<-1, eps, r, sigma(r)>, eps from Q(s)")
        }
        RegulatorCase::DihedralReal => {
            let dd = dihedral_d(params)?;
            let fd = field_data_dihedral(m, &dd)?;
            if !is_irreducible(&fd.field, precision)? || real_root_count(&fd.field, precision)? != 4 {
                return Err(Error::Hypothesis(String::from("Pw must be irreducible and totally real")));
            }
            let s = (&fd.u.scale(&int(2)) - &Poly::constant(m.clone())).rem(&fd.field)?;
            d = Some(dd);
            (fd, s, params.s2(), "<-1, eps, r, sigma(r)>, eps from Q(s)")
        }
    };
    let places = Places::new(&fd.field, precision)?;
    let prec = places.precision;
    if places.points.len() != 4 {
        return Err(Error::Hypothesis(String::from("unit rank is not 3")));
    }
    let qu = quadratic_unit(&root, &square, &fd.field, prec)?;
    let units = [qu.element.clone(), Poly::x(), fd.sigma.clone()];
    let minors = places.regulator_minors(&units)?;
    let det = minors[minors.len() - 1].clone();
    let cfs: Vec<Real> =
        places.points.iter().map(|(z, _)| closed_form_at(case, z, &fd, &qu.ln, params, d.as_ref(), prec)).collect();
    let closed = cfs[0].clone();
    let (tolerance, matches) = if case == RegulatorCase::DihedralReal {
        let mm2 = Real::from_rational(&(m - int(2)).abs(), prec);
        let tol = mm2.sqrt().recip();
        let rel = (&(&det - &closed) / &closed).abs();
        let ok = rel <= tol;
        (tol, ok)
    } else {
        let tol = tiny(precision / 2, prec);
        let ok = (&det - &closed).abs() <= tol;
        (tol, ok)
    };
    let index = index_report(params, &fd, &places, &qu, &det, precision)?;
    let torsion = torsion_order(&fd.field, precision.min(256))?;
    Ok(RegulatorReport {
        case,
        params: params.clone(),
        d,
        field_poly: fd.field.clone(),
        unit_system: String::from(system),
        torsion,
        fundamental_unit: qu.eps,
        precision: prec,
        log_matrix_det: det,
        minor_spread: max_spread(&minors),
        closed_form: closed,
        closed_form_spread: max_spread(&cfs),
        tolerance,
        matches,
        index,
    })
}

fn index_report(
    params: &Params,
    fd: &FieldData,
    places: &Places,
    qu: &QuadraticUnit,
    det: &Real,
    precision: usize,
) -> Result<Option<IndexReport>> {
    let x1 = &Poly::x() + &Poly::one();
    if !is_unit(&fd.field, &x1)? {
        return Ok(None);
    }
    let mm2 = &params.m - int(2);
    let mut predicted = mm2 == int(1) || mm2 == int(-1);
    if let Some(w) = perfect_square(&params.w2()) {
        let base = &params.m + int(2) + &params.a;
        for q1 in [(&base + &w) / int(2), (&base - &w) / int(2)] {
            predicted |= q1 == int(1) || q1 == int(-1);
        }
    }
    let minors = places.regulator_minors(&[qu.element.clone(), Poly::x(), x1])?;
    let r1 = minors[minors.len() - 1].clone();
    let ratio = det / &r1;
    let two = Real::from_i64(2, places.precision);
    let halves = (det - &(&two * &r1)).abs() <= tiny(precision / 2, places.precision);
    Ok(Some(IndexReport { predicted_two: predicted, det_r_plus_one: r1, ratio, halves }))
}

// ---------------------------------------------------------------------------
// tiny regulator estimates

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EstimateFamily {
    /// `m = 1`, `A = L_(2j-1) - 3`.
    M1TinyR,
    /// The `sw1` twins.
    Sw1TinyR,
    /// `P_w` with `d = 1`, `m = L_2j`.
    SdbTinyR,
}

impl EstimateFamily {
    pub const ALL: [EstimateFamily; 3] = [EstimateFamily::M1TinyR, EstimateFamily::Sw1TinyR, EstimateFamily::SdbTinyR];

    pub fn label(self) -> &'static str {
        match self {
            EstimateFamily::M1TinyR => "m1_tinyR",
            EstimateFamily::Sw1TinyR => "sw1_tinyR",
            EstimateFamily::SdbTinyR => "sdb_tinyR",
        }
    }

    pub fn parse(s: &str) -> Option<EstimateFamily> {
        EstimateFamily::ALL.into_iter().find(|c| c.label() == s)
    }
}

#[derive(Clone, Debug)]
pub struct EstimateRow {
    pub j: i64,
    pub params: Params,
    pub field_poly: Poly<Rational>,
    /// `Delta(F/Q)` from the discriminant formulas.
    pub delta: Rational,
    /// Squarefreeness or coprimality condition that failed, if any.
    pub precondition: Option<String>,
    pub r1: Option<Real>,
    pub estimate: Option<Real>,
    pub ratio: Option<Real>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug)]
pub struct EstimateReport {
    pub family: EstimateFamily,
    pub precision: usize,
    pub rows: Vec<EstimateRow>,
    /// `C` fitted at the first index from `|ratio - 1| = C/j`.
    pub fitted_c: Option<f64>,
    pub within_quarter: bool,
    pub trending: bool,
}

impl EstimateReport {
    pub fn ratio(&self, j: i64) -> Option<f64> {
        self.rows.iter().find(|r| r.j == j).and_then(|r| r.ratio.as_ref()).map(Real::to_f64)
    }
}

/// Discriminant of the quadratic field `Q(sqrt q)`.
pub fn quadratic_field_discriminant(q: &Rational) -> Option<Integer> {
    let (core, _) = square_class(q)?;
    if core == Integer::one() {
        return None;
    }
    Some(if core.mod_floor(&Integer::from(4)) == Integer::one() { core } else { core * 4 })
}

fn estimate_row(family: EstimateFamily, j: i64, precision: usize) -> Result<EstimateRow> {
    let prec = precision;
    let five = Integer::from(5);
    let lf = |n: i64| lucas_fib(&five, n).map(|v| (from_integer(&v.l), from_integer(&v.f)));
    let mut precondition = None;
    let (params, field, delta, root, square, scale, divisor) = match family {
        EstimateFamily::M1TinyR => {
            let (l, _) = lf(2 * j - 1)?;
            let params = Params::new(int(1), l - int(3));
            let y2 = params.y2();
            if squarefree_check(&y2.to_integer()) == Squarefree::No {
                precondition = Some(format!("A^2 + 4 = {y2} is not squarefree"));
            }
            let dsw = [params.s2(), params.w2(), params.s2() * params.w2()]
                .iter()
                .map(quadratic_field_discriminant)
                .try_fold(Integer::one(), |acc, d| d.map(|d| acc * d))
                .ok_or_else(|| Error::Hypothesis(String::from("Q(s, w) is not biquadratic")))?;
            let dsw = from_integer(&dsw);
            let delta = &dsw * &dsw * &y2 * &y2;
            let t = octic(&params);
            let fd = field_data_t(&params, &t)?;
            let w = fd.w.clone().ok_or_else(|| Error::Hypothesis(String::from("w is not in Q(r)")))?;
            (params.clone(), fd, delta, w, params.w2(), rat(1, 2), int(15).pow(4))
        }
        EstimateFamily::Sw1TinyR => {
            let pair = golden_twins(TwinFamily::Sw1, j)?;
            let (_, f) = lf(2 * j - 1)?;
            let c = &f - int(2);
            let ci = c.to_integer();
            if squarefree_check(&ci) == Squarefree::No || ci.is_even() || ci.is_multiple_of(&Integer::from(5)) {
                precondition = Some(format!("F_(2j-1) - 2 = {c} is not squarefree and prime to 10"));
            }
            let params = pair.params();
            let b = build_bundle(&params)?;
            let disc = |q: &Poly<BiquadElem>| {
                let c1 = q.coeffs()[1].clone();
                let c0 = q.coeffs()[0].clone();
                c1.clone() * c1 - BiquadElem::rational(int(4), &b.ctx) * c0
            };
            let prod = (disc(&b.q[0]) * disc(&b.q[2]))
                .as_rational()
                .or_else(|| {
                    let sw = perfect_square(&(b.s2.clone() * b.w2.clone()))?;
                    let e = disc(&b.q[0]) * disc(&b.q[2]);
                    e.split_sw().map(|(a0, a1)| a0 + a1 * sw)
                })
                .ok_or_else(|| Error::Internal(String::from("disc(q1) disc(q3) is not rational")))?;
            if prod != int(5) * &c * &c {
                return Err(Error::Internal(format!("disc(q1) disc(q3) = {prod}, expected 5 (F-2)^2")));
            }
            let dk = from_integer(&quadratic_field_discriminant(&params.s2()).expect("Q(s) quadratic"));
            let delta = &dk * &dk * prod;
            let fd = field_data_t(&params, &pair.psw)?;
            let s = (&fd.u.scale(&int(2)) - &Poly::constant(int(3))).rem(&fd.field)?;
            (params.clone(), fd, delta, s, params.s2(), rat(1, 4), int(25))
        }
        EstimateFamily::SdbTinyR => {
            let (m, _) = lf(2 * j)?;
            let d = int(1);
            let a = -&m - int(2) - &d - (&m - int(2)) / &d;
            let params = Params::new(m.clone(), a);
            let y2 = params.y2();
            if squarefree_check(&y2.to_integer()) == Squarefree::No {
                precondition = Some(format!("4m^2 + 9 = {y2} is not squarefree"));
            }
            let w = &m - int(2) - &d;
            let q1 = (&m + int(2) + &params.a + &w) / int(2);
            let dk = from_integer(&quadratic_field_discriminant(&params.s2()).expect("Q(s) quadratic"));
            let delta = &dk * &dk * &y2 * &q1 * &q1;
            let fd = field_data_dihedral(&m, &d)?;
            let s = (&fd.u.scale(&int(2)) - &Poly::constant(m.clone())).rem(&fd.field)?;
            (params.clone(), fd, delta, s, params.s2(), rat(1, 4), int(25))
        }
    };
    let mut row = EstimateRow {
        j,
        params,
        field_poly: field.field.clone(),
        delta: delta.clone(),
        precondition,
        r1: None,
        estimate: None,
        ratio: None,
        skipped: None,
    };
    let places = Places::new(&field.field, prec)?;
    if places.points.len() != 4 {
        row.skipped = Some(String::from("unit rank is not 3"));
        return Ok(row);
    }
    let x1 = &Poly::x() + &Poly::one();
    if !is_unit(&field.field, &x1)? {
        row.skipped = Some(String::from("r + 1 is not a unit"));
        return Ok(row);
    }
    let wp = places.precision;
    let qu = quadratic_unit(&root, &square, &field.field, wp)?;
    let minors = places.regulator_minors(&[qu.element, Poly::x(), x1])?;
    let r1 = minors[minors.len() - 1].clone();
    let l = Real::from_rational(&(&delta / &divisor), wp).ln();
    let est = &(&Real::from_rational(&scale, wp) * &qu.ln) * &(&l * &l);
    row.ratio = Some(&r1 / &est);
    row.r1 = Some(r1);
    row.estimate = Some(est);
    Ok(row)
}

/// `R1 = Reg<zeta, eps, r, r+1>` against the asymptotic estimate, per index.
pub fn regulator_estimate_check(
    family: EstimateFamily,
    js: RangeInclusive<i64>,
    precision: usize,
) -> Result<EstimateReport> {
    if *js.end() > 8 {
        return Err(Error::InvalidArgument(String::from("index range is limited to j <= 8")));
    }
    let mut rows = Vec::new();
    for j in js {
        rows.push(estimate_row(family, j, precision)?);
    }
    let devs: Vec<(i64, f64)> =
        rows.iter().filter_map(|r| r.ratio.as_ref().map(|q| (r.j, (q.to_f64() - 1.0).abs()))).collect();
    let within_quarter = !devs.is_empty() && devs.iter().all(|&(_, e)| e <= 0.25);
    let fitted_c = devs.first().map(|&(j, e)| e * j as f64);
    let trending = match fitted_c {
        Some(c) => {
            devs.windows(2).all(|w| w[1].1 <= w[0].1) && devs.iter().all(|&(j, e)| e <= c / j as f64 * (1.0 + 1e-12))
        }
        None => false,
    };
    Ok(EstimateReport { family, precision, rows, fitted_c, within_quarter, trending })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64(cs)
    }

    #[test]
    fn quadratic_embeddings() {
        let e = complex_roots(&p(&[1, -3, 1]), 128).unwrap();
        assert_eq!(e.real_count, 2);
        let five = Real::from_i64(5, e.precision).sqrt();
        let r = (&Real::from_i64(3, e.precision) + &five) / Real::from_i64(2, e.precision);
        assert!(e.real_roots().iter().any(|x| crate::numeric::close(x, &r, 100)));
    }

    #[test]
    fn units_exact() {
        let t = octic(&Params::ints(3, 13));
        assert!(is_unit(&t, &Poly::x()).unwrap());
        assert!(!is_unit(&p(&[-2, 0, 1]), &Poly::x()).unwrap());
        assert!(is_algebraic_integer(&p(&[-2, 0, 1]), &Poly::x()).unwrap());
    }

    #[test]
    fn unit_examples() {
        for (m, a) in [(3, 13), (1, -5), (3, -6)] {
            let r = unit_checks(&Params::ints(m, a)).unwrap();
            assert!(r.identities_hold(), "{m} {a} {:?}", r.checks);
            assert!(r.exceptional_triple, "{m} {a}");
        }
        let r = unit_checks(&Params::ints(5, 1)).unwrap();
        assert!(r.identities_hold());
        assert!(!r.exceptional_triple);
    }

    #[test]
    fn constellation_d1() {
        let r = constellation_check(&int(7), &int(1)).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert!(r.all_units);
        assert_eq!(r.pw, p(&[1, 16, 26, 11, 1]));
        let r = constellation_check(&int(12), &int(5)).unwrap();
        assert!(r.checks.iter().filter(|c| !c.name.starts_with("unit:")).all(|c| c.pass), "{:?}", r.checks);
        assert!(!r.all_units);
    }

    #[test]
    fn golden_examples() {
        let t = golden_twins(TwinFamily::Sw1, 3).unwrap();
        assert_eq!(t.a, int(13));
        assert_eq!(t.psw, p(&[1, -2, -16, -13, 1]));
        assert_eq!(t.psw_bar, p(&[1, -42, -56, -13, 1]));
        assert!(t.degenerate.is_none());
        let t1 = golden_twins(TwinFamily::Sw1, 1).unwrap();
        assert_eq!(t1.degenerate, Some("y^2 = 0"));
        assert_eq!(t1.psw_bar, p(&[-1, 1, 1]).pow(2));
    }

    #[test]
    fn norm_construction_matches_golden() {
        let g = twins_by_norm(&Integer::from(5), 3..=3).unwrap();
        let a: Vec<Rational> = g.iter().map(|t| t.a.clone()).collect();
        assert!(a.contains(&int(13)) && a.contains(&int(-23)));
    }

    #[test]
    fn d34_and_bad_d() {
        let t = twins_enumerate(&Integer::from(34), 0..=1).unwrap();
        assert!(!t.is_empty());
        assert!(t.iter().all(|x| matches!(x.family, TwinFamily::NormPlusOne { .. }) && x.invariant_holds()));
        assert_eq!(twins_enumerate(&Integer::from(3), 0..=1).unwrap_err(), Error::NotSumOfTwoSquares(Integer::from(3)));
        assert!(matches!(twins_enumerate(&Integer::from(20), 0..=1), Err(Error::NotSquarefree(_))));
    }

    #[test]
    fn field_equality_small() {
        let q = p(&[1, 1, 1, 1, 1]);
        assert!(same_field_check(&q, &q, 128).unwrap().is_same());
        // x^4 - 10x^2 + 1 and x^4 - 4x^2 + 1 define Q(sqrt2, sqrt3)
        assert!(same_field_check(&p(&[1, 0, -10, 0, 1]), &p(&[1, 0, -4, 0, 1]), 128).unwrap().is_same());
        assert!(!same_field_check(&p(&[1, 0, -10, 0, 1]), &p(&[-2, 0, 0, 0, 1]), 128).unwrap().is_same());
    }

    #[test]
    fn torsion_small() {
        assert_eq!(torsion_order(&p(&[1, 1, 1, 1, 1]), 128).unwrap(), 10);
        assert_eq!(torsion_order(&p(&[1, 0, 0, 0, 1]), 128).unwrap(), 8);
        assert_eq!(torsion_order(&p(&[1, 0, -1, 0, 1]), 128).unwrap(), 12);
        assert_eq!(torsion_order(&p(&[2, 0, 0, 0, 1]), 128).unwrap(), 2);
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&p(&[1, 1, 1, 1, 1]), 128).unwrap());
        assert!(is_irreducible(&p(&[1, 0, -1, 0, 1]), 128).unwrap());
        assert!(!is_irreducible(&(&p(&[1, 1, 1]) * &p(&[-1, 1, 1])), 128).unwrap());
    }
}
