//! The classical "simplest" families, Washington's quartics, Shen's
//! polynomials and the order-10 map.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::exact::{int, rat, Integer, Rational};
use crate::murphy::{octic, washington_pt, washington_u, Params};
use crate::numeric::{complex_roots, Complex, Real};
use crate::poly::resultant::{discriminant, multiplication_charpoly};
use crate::poly::{MobiusMap, Poly, QuotientRing};
use crate::quadring::{QuadCtx, QuadElem};
use crate::ring::Ring;

/// Polynomials in `x` whose coefficients are polynomials in a parameter.
pub type ParamPoly = Poly<Poly<Rational>>;

fn tp(cs: &[i64]) -> Poly<Rational> {
    Poly::from_i64(cs)
}

fn xp(cs: Vec<Poly<Rational>>) -> ParamPoly {
    Poly::new(cs)
}

fn specialize(p: &ParamPoly, t: &Rational) -> Poly<Rational> {
    Poly::new(p.coeffs().iter().map(|c| c.eval(t)).collect())
}

fn t_degree(p: &ParamPoly) -> usize {
    p.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    CubicA,
    QuarticB,
    WashingtonC,
    QuinticD,
    SexticE,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] =
        [FamilyKind::CubicA, FamilyKind::QuarticB, FamilyKind::WashingtonC, FamilyKind::QuinticD, FamilyKind::SexticE];

    pub fn degree(self) -> usize {
        match self {
            FamilyKind::CubicA => 3,
            FamilyKind::QuarticB | FamilyKind::WashingtonC => 4,
            FamilyKind::QuinticD => 5,
            FamilyKind::SexticE => 6,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FamilyKind::CubicA => "cubic_a",
            FamilyKind::QuarticB => "quartic_b",
            FamilyKind::WashingtonC => "washington_c",
            FamilyKind::QuinticD => "quintic_d",
            FamilyKind::SexticE => "sextic_e",
        }
    }

    /// Accepts a label or the letter `a`..`e`.
    pub fn parse(s: &str) -> Option<FamilyKind> {
        let letter = |k: FamilyKind| k.label().rsplit('_').next() == Some(s);
        FamilyKind::ALL.into_iter().find(|&k| k.label() == s || letter(k))
    }

    /// `P`, and `sigma = num/den`, all over `Q[t]`.
    pub fn symbolic(self) -> SymbolicFamily {
        let (p, num, den) = match self {
            FamilyKind::CubicA => (
                xp(vec![tp(&[-1]), tp(&[-3, -1]), tp(&[0, -1]), tp(&[1])]),
                xp(vec![tp(&[-1]), tp(&[-1])]),
                xp(vec![tp(&[]), tp(&[1])]),
            ),
            FamilyKind::QuarticB => (
                xp(vec![tp(&[1]), tp(&[0, 1]), tp(&[-6]), tp(&[0, -1]), tp(&[1])]),
                xp(vec![tp(&[-1]), tp(&[-1])]),
                xp(vec![tp(&[-1]), tp(&[1])]),
            ),
            FamilyKind::WashingtonC => (
                xp(vec![tp(&[1]), tp(&[4, 2, 1, 1]), tp(&[6, 4, 3, 1]), tp(&[4, 2, 1]), tp(&[1])]),
                xp(vec![tp(&[-2, -2, -1, -1]), tp(&[-5, -4, -3, -1]), tp(&[-4, -2, -1]), tp(&[-1])]),
                xp(vec![tp(&[0, 1])]),
            ),
            FamilyKind::QuinticD => (
                xp(vec![
                    tp(&[-1]),
                    tp(&[10, 10, 4, 1]),
                    tp(&[-5, -15, -11, -5, -1]),
                    tp(&[-10, -10, -6, -2]),
                    tp(&[0, 0, -1]),
                    tp(&[1]),
                ]),
                xp(vec![
                    tp(&[-9, -20, -16, -6, -1]),
                    tp(&[-19, -29, -19, -7, -1]),
                    tp(&[8, 14, 9, 4, 1]),
                    tp(&[3, 3, 2, 1]),
                    tp(&[-1, -1]),
                ]),
                xp(vec![tp(&[7, 10, 5, 1])]),
            ),
            FamilyKind::SexticE => (
                xp(vec![tp(&[1]), tp(&[6, 2]), tp(&[0, 5]), tp(&[-20]), tp(&[-15, -5]), tp(&[0, -2]), tp(&[1])]),
                xp(vec![tp(&[-1]), tp(&[-2])]),
                xp(vec![tp(&[-1]), tp(&[1])]),
            ),
        };
        SymbolicFamily { kind: self, p, num, den }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicFamily {
    pub kind: FamilyKind,
    pub p: ParamPoly,
    pub num: ParamPoly,
    pub den: ParamPoly,
}

/// A family member at a fixed `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub t: Rational,
    pub n: usize,
    pub p: Poly<Rational>,
    pub sigma_num: Poly<Rational>,
    pub sigma_den: Poly<Rational>,
}

pub fn family_poly(kind: FamilyKind, t: &Rational) -> Result<FamilySpec> {
    let sym = kind.symbolic();
    let sigma_den = specialize(&sym.den, t);
    if sigma_den.degree() == Some(0) && sigma_den.coeffs()[0].is_zero() || sigma_den.is_zero() {
        return Err(Error::InvalidArgument(alloc::format!("t = {t} is excluded for {kind}")));
    }
    Ok(FamilySpec {
        kind,
        t: t.clone(),
        n: kind.degree(),
        p: specialize(&sym.p, t),
        sigma_num: specialize(&sym.num, t),
        sigma_den,
    })
}

impl FamilySpec {
    pub fn ring(&self) -> QuotientRing<Rational> {
        QuotientRing::new(self.p.clone()).expect("positive degree")
    }

    /// `sigma(x) mod P`.
    pub fn sigma_mod_p(&self) -> Result<Poly<Rational>> {
        self.ring().div(&self.sigma_num, &self.sigma_den)
    }

    /// `sigma^k(x) = a_k/b_k` with no cancellation, `k = 0..count`, both
    /// reduced modulo `P`.
    pub fn cleared_orbit(&self, count: usize) -> Vec<(Poly<Rational>, Poly<Rational>)> {
        let ring = self.ring();
        let e = self.sigma_num.degree().unwrap_or(0).max(self.sigma_den.degree().unwrap_or(0));
        let mut out = Vec::with_capacity(count);
        let mut cur = (ring.reduce(&Poly::x()), Poly::one());
        for _ in 0..count {
            let next = (homogenize(&ring, &self.sigma_num, &cur, e), homogenize(&ring, &self.sigma_den, &cur, e));
            out.push(cur);
            cur = next;
        }
        out
    }

    /// The numerator of `1 + x + x sigma(x) + ... + x sigma(x) ... sigma^(n-2)(x)`
    /// over the common denominator `b_0 ... b_(n-2)`, reduced modulo `P`.
    pub fn murphy_remainder(&self) -> Poly<Rational> {
        let ring = self.ring();
        let orbit = self.cleared_orbit(self.n - 1);
        let prod = |it: &mut dyn Iterator<Item = &Poly<Rational>>| it.fold(Poly::one(), |acc, f| ring.mul(&acc, f));
        let mut sum = prod(&mut orbit.iter().map(|o| &o.1));
        for j in 0..orbit.len() {
            let num = prod(&mut orbit[..=j].iter().map(|o| &o.0));
            let den = prod(&mut orbit[j + 1..].iter().map(|o| &o.1));
            sum = &sum + &ring.mul(&num, &den);
        }
        sum
    }

    /// Compositional order of `sigma` modulo `P`, up to `cap`.
    pub fn sigma_order(&self, cap: usize) -> Result<Option<usize>> {
        let ring = self.ring();
        let s = self.sigma_mod_p()?;
        let x = ring.reduce(&Poly::x());
        let mut cur = s.clone();
        for k in 1..=cap {
            if cur == x {
                return Ok(Some(k));
            }
            cur = ring.compose(&cur, &s);
        }
        Ok(None)
    }

    /// `y_k = x sigma(x) ... sigma^(k-1)(x) mod P`.
    pub fn y_k(&self, k: usize) -> Result<Poly<Rational>> {
        let ring = self.ring();
        let s = self.sigma_mod_p()?;
        let mut cur = ring.reduce(&Poly::x());
        let mut y = Poly::one();
        for _ in 0..k {
            y = ring.mul(&y, &cur);
            cur = ring.compose(&cur, &s);
        }
        Ok(y)
    }

    /// `f_k`, the characteristic polynomial of `y_k`.
    pub fn conjugate_product(&self, k: usize) -> Result<Poly<Rational>> {
        multiplication_charpoly(&self.p, &self.y_k(k)?)
    }

    /// `(M)` for `y_k` under `eta = sigma^k`, computed modulo `P`.
    pub fn diffgen_holds(&self, k: usize) -> Result<bool> {
        let ring = self.ring();
        let s = self.sigma_mod_p()?;
        let eta = (1..k).fold(s.clone(), |acc, _| ring.compose(&acc, &s));
        let y = self.y_k(k)?;
        let mut term = y.clone();
        let mut conj = y.clone();
        let mut sum = &Poly::one() + &y;
        for _ in 0..self.n - 2 {
            conj = ring.compose(&conj, &eta);
            term = ring.mul(&term, &conj);
            sum = &sum + &term;
        }
        Ok(ring.is_zero(&sum))
    }
}

fn homogenize(
    ring: &QuotientRing<Rational>,
    f: &Poly<Rational>,
    cur: &(Poly<Rational>, Poly<Rational>),
    e: usize,
) -> Poly<Rational> {
    let (a, b) = cur;
    let mut acc = Poly::zero();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = ring.mul(&ring.pow(a, i as u32), &ring.pow(b, (e - i) as u32)).scale(c);
        acc = &acc + &term;
    }
    acc
}

/// `P` divides the cleared numerator of `(M)` at this `t`.
pub fn verify_m(spec: &FamilySpec) -> bool {
    match IntQuotient::from_spec(spec) {
        Some(q) => q.murphy_remainder_is_zero(spec),
        None => spec.murphy_remainder().is_zero(),
    }
}

/// `Z[x]/(P)` for monic integral `P`; the same computation as
/// [`FamilySpec::murphy_remainder`] without rational normalization.
struct IntQuotient {
    p: Vec<Integer>,
}

fn int_coeffs(f: &Poly<Rational>) -> Option<Vec<Integer>> {
    f.coeffs().iter().map(|c| c.is_integer().then(|| c.numer().clone())).collect()
}

impl IntQuotient {
    fn from_spec(spec: &FamilySpec) -> Option<IntQuotient> {
        let p = int_coeffs(&spec.p)?;
        int_coeffs(&spec.sigma_num)?;
        int_coeffs(&spec.sigma_den)?;
        spec.p.is_monic().then_some(IntQuotient { p })
    }

    fn n(&self) -> usize {
        self.p.len() - 1
    }

    fn reduce(&self, mut f: Vec<Integer>) -> Vec<Integer> {
        let n = self.n();
        while f.len() > n {
            let top = f.pop().unwrap();
            let k = f.len() - n;
            for (i, c) in self.p[..n].iter().enumerate() {
                f[k + i] -= &top * c;
            }
        }
        f
    }

    fn mul(&self, a: &[Integer], b: &[Integer]) -> Vec<Integer> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Integer::from(0); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    fn pow(&self, a: &[Integer], e: usize) -> Vec<Integer> {
        (0..e).fold(vec![Integer::from(1)], |acc, _| self.mul(&acc, a))
    }

    fn add(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
        let mut out = vec![Integer::from(0); a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in b.iter().enumerate() {
            out[i] += x;
        }
        out
    }

    fn homogenize(&self, f: &[Integer], a: &[Integer], b: &[Integer], e: usize) -> Vec<Integer> {
        let mut acc = Vec::new();
        for (i, c) in f.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let term: Vec<Integer> =
                self.mul(&self.pow(a, i), &self.pow(b, e - i)).into_iter().map(|v| v * c).collect();
            acc = Self::add(&acc, &term);
        }
        acc
    }

    fn murphy_remainder_is_zero(&self, spec: &FamilySpec) -> bool {
        let num = int_coeffs(&spec.sigma_num).unwrap();
        let den = int_coeffs(&spec.sigma_den).unwrap();
        let e = (num.len().max(den.len())).saturating_sub(1);
        let one = vec![Integer::from(1)];
        let mut orbit = Vec::with_capacity(spec.n - 1);
        let mut cur = (self.reduce(vec![Integer::from(0), Integer::from(1)]), one.clone());
        for _ in 0..spec.n - 1 {
            let next = (self.homogenize(&num, &cur.0, &cur.1, e), self.homogenize(&den, &cur.0, &cur.1, e));
            orbit.push(cur);
            cur = next;
        }
        let mut sum = orbit.iter().fold(one.clone(), |acc, o| self.mul(&acc, &o.1));
        for j in 0..orbit.len() {
            let a = orbit[..=j].iter().fold(one.clone(), |acc, o| self.mul(&acc, &o.0));
            let b = orbit[j + 1..].iter().fold(one.clone(), |acc, o| self.mul(&acc, &o.1));
            sum = Self::add(&sum, &self.mul(&a, &b));
        }
        sum.iter().all(num_traits::Zero::is_zero)
    }
}

/// Degree data bounding the cleared `(M)` remainder as a polynomial in `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    pub deg_x: usize,
    pub deg_t: usize,
    /// t-degree of the remainder of the numerator modulo `P`.
    pub bound: usize,
}

impl DegreeBound {
    pub fn samples(&self) -> usize {
        self.bound + 1
    }
}

pub fn m_degree_bound(kind: FamilyKind) -> DegreeBound {
    let sym = kind.symbolic();
    let n = kind.degree();
    let e = sym.num.degree().unwrap_or(0).max(sym.den.degree().unwrap_or(0));
    let (g, h) = (t_degree(&sym.num), t_degree(&sym.den));
    let mut xs = vec![1usize];
    let mut nt = vec![0usize];
    let mut dt = vec![0usize];
    for k in 0..n.saturating_sub(2) {
        let hi = nt[k].max(dt[k]);
        xs.push(e * xs[k]);
        nt.push(g + e * hi);
        dt.push(h + e * hi);
    }
    let terms = xs.len();
    let mut deg_t = dt.iter().sum::<usize>();
    for j in 0..terms {
        let v = nt[..=j].iter().sum::<usize>() + dt[j + 1..].iter().sum::<usize>();
        deg_t = deg_t.max(v);
    }
    let deg_x = xs.iter().sum::<usize>();
    let bound = deg_t + (deg_x + 1).saturating_sub(n) * t_degree(&sym.p);
    DegreeBound { deg_x, deg_t, bound }
}

/// `0, 1, -1, 2, -2, ...`
pub fn sample_ts(count: usize, excluded: impl Fn(&Rational) -> bool) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut k = 0i64;
    while out.len() < count {
        for t in if k == 0 { vec![0] } else { vec![k, -k] } {
            let t = int(t);
            if out.len() < count && !excluded(&t) {
                out.push(t);
            }
        }
        k += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct MReport {
    pub kind: FamilyKind,
    pub bound: DegreeBound,
    pub samples: usize,
    pub failures: Vec<Rational>,
}

impl MReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.samples > self.bound.bound
    }
}

/// `(M)` as an identity in `t`: checked at more values of `t` than the
/// remainder's t-degree.
pub fn verify_m_family(kind: FamilyKind) -> MReport {
    let bound = m_degree_bound(kind);
    let ts = sample_ts(bound.samples(), |t| family_poly(kind, t).is_err());
    let failures =
        ts.iter().filter(|t| !verify_m(&family_poly(kind, t).expect("sampled t is allowed"))).cloned().collect();
    MReport { kind, bound, samples: ts.len(), failures }
}

/// The alternate quintic `f_2` for family (d).
pub fn quintic_f2(t: &Rational) -> Poly<Rational> {
    let p = xp(vec![
        tp(&[-1]),
        tp(&[-10, -5, -2]),
        tp(&[-25, -25, -17, -5, -1]),
        tp(&[-5, -5, -7, -3, -1]),
        tp(&[5, 5, 3, 1]),
        tp(&[1]),
    ]);
    specialize(&p, t)
}

/// `-x^n f(1/x)`.
pub fn neg_reciprocal(f: &Poly<Rational>) -> Poly<Rational> {
    -&f.reversed(f.degree().unwrap_or(0))
}

/// For family (a): `z = 2r^2 - (2t+1) r - t - 4` has `sigma(z) = r z`,
/// trace zero and minimal polynomial `z^3 - D z + D`, `D = t^2 + 3t + 9`.
pub fn cubic_z_check(t: &Rational) -> Result<bool> {
    let spec = family_poly(FamilyKind::CubicA, t)?;
    let ring = spec.ring();
    let z = Poly::new(vec![-(t + int(4)), -(int(2) * t + int(1)), int(2)]);
    let d = t * t + int(3) * t + int(9);
    let s = spec.sigma_mod_p()?;
    let rotated = ring.compose(&z, &s) == ring.mul(&Poly::x(), &z);
    let min = Poly::new(vec![d.clone(), -d.clone(), int(0), int(1)]);
    let charpoly = multiplication_charpoly(&spec.p, &z)? == min;
    let disc = discriminant(&spec.p)? == &d * &d;
    Ok(rotated && charpoly && disc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WashingtonReport {
    /// `u^2 - (t^2+2) u + 1 = 0 mod P_t`.
    pub u_relation: bool,
    /// `x/v` agrees with the closed form.
    pub x_over_v_formula: bool,
    /// `f_t(x/v) = 0 mod P_t`.
    pub f_of_x_over_v: bool,
    /// `P_t(x v) = 0 mod f_t`, with `x v` given by its closed form.
    pub p_of_xv: bool,
    /// `(x^2 - t x - 1)^2` divides `T(t^2+2, 2t, x)`.
    pub related_square_factor: bool,
}

impl WashingtonReport {
    pub fn all_pass(&self) -> bool {
        self.u_relation && self.x_over_v_formula && self.f_of_x_over_v && self.p_of_xv && self.related_square_factor
    }
}

/// Washington's cyclic quartic `f_t`.
pub fn washington_ft(t: &Rational) -> Poly<Rational> {
    let t2 = t * t;
    let t3 = &t2 * t;
    Poly::new(vec![int(1), -t2.clone(), -(&t3 + int(2) * &t2 + int(4) * t + int(2)), -t2, int(1)])
}

pub fn washington_equiv(t: &Rational) -> Result<WashingtonReport> {
    if t.is_zero() || *t == int(-2) {
        return Err(Error::InvalidArgument(alloc::format!("t = {t} is excluded")));
    }
    let t2 = t * t;
    let pt = washington_pt(t);
    let ft = washington_ft(t);
    let rp = QuotientRing::new(pt.clone())?;
    let u = washington_u(t)?;
    let u_rel = &(&rp.mul(&u, &u) - &u.scale_rational(&(&t2 + int(2)))) + &Poly::one();
    let v = (&u - &Poly::one()).scale_rational(&(int(1) / t));
    let x_over_v = rp.div(&Poly::x(), &v)?;
    let c = &t2 + t + int(3);
    let formula = Poly::new(vec![int(1), c.clone(), c, int(1)]).scale_rational(&(int(1) / &t2));
    let rf = QuotientRing::new(ft.clone())?;
    let xv = Poly::new(vec![int(-1), &t2 + t, int(-1)]).scale_rational(&(int(1) / (t + int(2))));
    let related = octic(&Params::new(&t2 + int(2), int(2) * t));
    let sq = Poly::new(vec![int(-1), -t.clone(), int(1)]).pow(2);
    Ok(WashingtonReport {
        u_relation: rp.is_zero(&u_rel),
        x_over_v_formula: rp.reduce(&formula) == x_over_v,
        f_of_x_over_v: rp.is_zero(&rp.compose(&ft, &x_over_v)),
        p_of_xv: rf.is_zero(&rf.compose(&pt, &xv)),
        related_square_factor: sq.divides(&related),
    })
}

/// 2-adic valuation of a positive integer.
pub fn v2(n: u32) -> u32 {
    n.trailing_zeros()
}

/// `Re((x + i)^n)`.
pub fn shen_q(n: u32) -> Poly<Rational> {
    let mut cs = vec![int(0); n as usize + 1];
    for k in (0..=n).step_by(2) {
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        cs[(n - k) as usize] = Rational::from_integer(binomial(Integer::from(n), Integer::from(k)) * sign);
    }
    Poly::new(cs)
}

/// `Im((x + i)^n)`.
pub fn shen_v(n: u32) -> Poly<Rational> {
    let mut cs = vec![int(0); n as usize];
    for k in (1..=n).step_by(2) {
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        cs[(n - k) as usize] = Rational::from_integer(binomial(Integer::from(n), Integer::from(k)) * sign);
    }
    Poly::new(cs)
}

/// `P_n(a, x) = Q_n - (a / 2^v2(n)) V_n` with `a` formal.
#[derive(Clone, Debug, PartialEq)]
pub struct ShenPoly {
    pub n: u32,
    pub q: Poly<Rational>,
    pub v: Poly<Rational>,
    pub p: ParamPoly,
}

impl ShenPoly {
    pub fn at(&self, a: &Rational) -> Poly<Rational> {
        specialize(&self.p, a)
    }
}

pub fn shen_build(n: u32) -> Result<ShenPoly> {
    if n < 2 {
        return Err(Error::InvalidArgument("Shen polynomials need n > 1".into()));
    }
    let q = shen_q(n);
    let v = shen_v(n);
    let scale = rat(1, 1i64 << v2(n));
    let deg = n as usize;
    let p = Poly::new(
        (0..=deg)
            .map(|k| {
                let qk = q.coeff(k).cloned().unwrap_or_else(|| int(0));
                let vk = v.coeff(k).cloned().unwrap_or_else(|| int(0));
                Poly::new(vec![qk, -(vk * &scale)])
            })
            .collect(),
    );
    Ok(ShenPoly { n, q, v, p })
}

/// `n (2^(n-2-2v) n)^(n-1) (a^2 + 4^v)^(n-1)` in `Q[a]`.
pub fn shen_disc_formula(n: u32) -> Poly<Rational> {
    let v = v2(n) as i64;
    let e = n as i64 - 2 - 2 * v;
    let two_e = if e >= 0 { int(1i64 << e) } else { rat(1, 1i64 << -e) };
    let c = int(n as i64) * (two_e * int(n as i64)).pow(n as i32 - 1);
    let base = Poly::new(vec![int(1i64 << (2 * v)), int(0), int(1)]);
    base.pow(n - 1).scale_rational(&c)
}

pub fn shen_disc_check(n: u32) -> Result<bool> {
    let sp = shen_build(n)?;
    Ok(discriminant(&sp.p)? == shen_disc_formula(n))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LambdaReport {
    pub n: u32,
    pub a: Rational,
    pub precision: usize,
    /// `perm[i] = j` when `lambda(root_i) = root_j`.
    pub perm: Vec<usize>,
    pub cyclic: bool,
    pub sum_points: usize,
    pub sum_ok: bool,
    /// `None` unless `4 | n`.
    pub s_vanishes: Option<bool>,
}

impl LambdaReport {
    pub fn all_pass(&self) -> bool {
        self.cyclic && self.sum_ok && self.s_vanishes != Some(false)
    }
}

fn mobius_real(m: &[Real; 4], x: &Real) -> Real {
    &(&(&m[0] * x) + &m[1]) / &(&(&m[2] * x) + &m[3])
}

fn mobius_complex(m: &[Real; 4], z: &Complex) -> Complex {
    let [a, b, c, d] = m.clone().map(Complex::real);
    &(&(&a * z) + &b) / &(&(&c * z) + &d)
}

fn is_single_cycle(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut i = 0;
    for _ in 0..perm.len() {
        if seen[i] {
            return false;
        }
        seen[i] = true;
        i = perm[i];
    }
    i == 0 && seen.iter().all(|&s| s)
}

/// `lambda: x -> (xi x - 1)/(x + xi)`, `xi = cot(pi/n)`, checked numerically.
pub fn lambda_cycle_check(n: u32, a: &Rational, precision: usize) -> Result<LambdaReport> {
    let sp = shen_build(n)?;
    let p = precision;
    let roots = complex_roots(&sp.at(a), p)?.centers();
    let sep = roots
        .iter()
        .enumerate()
        .flat_map(|(i, z)| roots[i + 1..].iter().map(move |w| (z - w).abs()))
        .fold(None::<Real>, |acc, d| Some(acc.map_or(d.clone(), |m| if d < m { d } else { m })))
        .ok_or_else(|| Error::InvalidArgument("need at least two roots".into()))?;
    let tol = &sep / &Real::from_i64(2, p);
    if tol < Real::pow2(-(p as i32) / 2, p) {
        return Err(Error::PrecisionExceeded { bits: p });
    }
    let theta = &Real::pi(p) / &Real::from_i64(n as i64, p);
    let xi = &theta.cos() / &theta.sin();
    let one = Real::from_i64(1, p);
    let lam = [xi.clone(), -&one, one.clone(), xi.clone()];
    let lam_inv = [xi.clone(), one.clone(), -&one, xi.clone()];

    let mut perm = Vec::with_capacity(roots.len());
    for z in &roots {
        let image = mobius_complex(&lam, z);
        let hits: Vec<usize> = (0..roots.len()).filter(|&j| (&image - &roots[j]).abs() < tol).collect();
        match hits.as_slice() {
            [j] => perm.push(*j),
            _ => perm.push(usize::MAX),
        }
    }
    let cyclic = perm.iter().all(|&j| j != usize::MAX) && is_single_cycle(&perm);

    let eps = Real::pow2(-(p as i32) / 2, p);
    let nq = sp.q.scale_rational(&int(n as i64));
    let sum_points = 10usize;
    let mut sum_ok = true;
    let mut s_ok = true;
    for j in 0..sum_points {
        let xq = int(j as i64) + rat(1, 7);
        let x = Real::from_rational(&xq, p);
        let mut cur = x.clone();
        let mut total = Real::zero(p);
        let mut scale = Real::zero(p);
        for _ in 0..n {
            total = &total + &cur;
            scale = &scale + &cur.abs();
            cur = mobius_real(&lam, &cur);
        }
        let expect = Real::from_rational(&(nq.eval(&xq) / sp.v.eval(&xq)), p);
        sum_ok &= (&total - &expect).abs() <= &eps * &(&scale + &one);

        if n % 4 == 0 {
            let mut cur = x.clone();
            let mut term = one.clone();
            let mut s = one.clone();
            let mut scale = one.clone();
            for _ in 0..n - 1 {
                term = &term * &cur;
                s = &s + &term;
                scale = &scale + &term.abs();
                cur = mobius_real(&lam_inv, &cur);
            }
            s_ok &= s.abs() <= &eps * &scale;
        }
    }
    Ok(LambdaReport {
        n,
        a: a.clone(),
        precision,
        perm,
        cyclic,
        sum_points,
        sum_ok,
        s_vanishes: (n % 4 == 0).then_some(s_ok),
    })
}

/// `xi^2 - 2 xi - 1 = 0`, so `xi = cot(pi/8)` on the positive branch.
pub fn shen_xi_ctx() -> Arc<QuadCtx> {
    QuadCtx::new(int(2), int(-1))
}

fn shen_octic_ring(a: &Rational, ctx: &Arc<QuadCtx>) -> Result<(QuotientRing<QuadElem>, Poly<QuadElem>)> {
    let p8 = shen_build(8)?.at(a).map(|c| QuadElem::rational(c.clone(), ctx));
    let ring = QuotientRing::new(p8)?;
    let xi = QuadElem::gen(ctx);
    let x = Poly::x_like(&xi);
    let num = Poly::new(vec![-xi.one_like(), -xi.clone()]);
    let den = &x - &Poly::constant(xi);
    let s = ring.div(&num, &den)?;
    Ok((ring, s))
}

/// The automorphism `sigma` of Shen's octic: `x -> (-xi x - 1)/(x - xi)` and
/// `xi -> -1/xi`.
fn shen_apply(ring: &QuotientRing<QuadElem>, s: &Poly<QuadElem>, f: &Poly<QuadElem>) -> Poly<QuadElem> {
    ring.compose(&f.map(|c| c.conj()), s)
}

/// Order of the automorphism and the `x^5` coefficient of `f_3`.
pub fn shen_octic_f3(a: &Rational) -> Result<(usize, QuadElem)> {
    let ctx = shen_xi_ctx();
    let (ring, s) = shen_octic_ring(a, &ctx)?;
    let one = QuadElem::rational(int(1), &ctx);
    let x = ring.reduce(&Poly::x_like(&one));
    let mut order = 0;
    let mut cur = x.clone();
    for k in 1..=16 {
        cur = shen_apply(&ring, &s, &cur);
        if cur == x {
            order = k;
            break;
        }
    }
    let r1 = shen_apply(&ring, &s, &x);
    let r2 = shen_apply(&ring, &s, &r1);
    let y = ring.mul(&ring.mul(&x, &r1), &r2);
    let f3 = multiplication_charpoly(ring.modulus(), &y)?;
    let c = f3.coeff_or_zero(5, &one);
    Ok((order, c))
}

/// `(12 a^2 + 768) xi + a^3 - 12 a^2 + 57 a - 768`.
pub fn shen_octic_f3_expected(a: &Rational) -> QuadElem {
    let ctx = shen_xi_ctx();
    let a2 = a * a;
    QuadElem::new(&a2 * a - int(12) * &a2 + int(57) * a - int(768), int(12) * &a2 + int(768), &ctx)
}

/// `(M)` with `n = 8` for the algebraic map `x -> (-xi x - 1)/(x - xi)` at a
/// point of `Q(xi)`.
pub fn shen_octic_m_at(x: &Rational) -> Option<bool> {
    let ctx = shen_xi_ctx();
    let xi = QuadElem::gen(&ctx);
    let one = xi.one_like();
    let map = MobiusMap { a: -xi.clone(), b: -one.clone(), c: one.clone(), d: -xi };
    let mut cur = QuadElem::rational(x.clone(), &ctx);
    let mut term = one.clone();
    let mut sum = one;
    for _ in 0..7 {
        term = term * cur.clone();
        sum = sum + term.clone();
        cur = map.apply(&cur)?;
    }
    Some(sum.is_zero())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Order10Report {
    pub m10_scalar: bool,
    pub m5_scalar: bool,
    pub samples: Vec<Rational>,
    /// `(k, holds)`: `(M)` with `n = 10` for `sigma = f^(k)`, `k` coprime to 10.
    pub by_power: Vec<(u32, bool)>,
    /// `(M)` for `y_3 = x f(x) f^(2)(x)` under `f^(3)`.
    pub y3_under_f3: bool,
}

impl Order10Report {
    pub fn holds_for(&self, k: u32) -> bool {
        self.by_power.iter().any(|&(j, ok)| j == k && ok)
    }
}

/// `u^2 + 3u + 1 = 0`.
pub fn order10_ctx() -> Arc<QuadCtx> {
    QuadCtx::new(int(-3), int(1))
}

/// `f: x -> (-x - 1)/(x + u)`.
pub fn order10_map() -> MobiusMap<QuadElem> {
    let ctx = order10_ctx();
    let u = QuadElem::gen(&ctx);
    let one = u.one_like();
    MobiusMap { a: -one.clone(), b: -one.clone(), c: one, d: u }
}

fn f_orbit(f: &MobiusMap<QuadElem>, x: &QuadElem, len: usize) -> Option<Vec<QuadElem>> {
    let mut out = Vec::with_capacity(len);
    let mut cur = x.clone();
    for _ in 0..len {
        out.push(cur.clone());
        cur = f.apply(&cur)?;
    }
    Some(out)
}

fn m_sum(terms: impl Iterator<Item = QuadElem>, one: &QuadElem) -> QuadElem {
    let mut prod = one.clone();
    let mut sum = one.clone();
    for t in terms {
        prod = prod * t;
        sum = sum + prod.clone();
    }
    sum
}

pub fn order10_check(points: usize) -> Order10Report {
    let f = order10_map();
    let ctx = order10_ctx();
    let one = QuadElem::rational(int(1), &ctx);
    let mut samples = Vec::new();
    let mut orbits = Vec::new();
    let mut j = 0i64;
    while samples.len() < points {
        let x = rat(j + 2, 3) * if j % 2 == 0 { int(1) } else { int(-1) };
        j += 1;
        if let Some(o) = f_orbit(&f, &QuadElem::rational(x.clone(), &ctx), 30) {
            samples.push(x);
            orbits.push(o);
        }
    }
    let by_power = [1u32, 3, 7, 9]
        .into_iter()
        .map(|k| {
            let ok = orbits.iter().all(|o| m_sum((0..9).map(|i| o[(k as usize * i) % 10].clone()), &one).is_zero());
            (k, ok)
        })
        .collect();
    let y3_under_f3 = orbits.iter().all(|o| {
        let y = |i: usize| o[i % 10].clone() * o[(i + 1) % 10].clone() * o[(i + 2) % 10].clone();
        m_sum((0..9).map(|i| y(3 * i)), &one).is_zero()
    });
    Order10Report {
        m10_scalar: f.power(10).is_scalar(),
        m5_scalar: f.power(5).is_scalar(),
        samples,
        by_power,
        y3_under_f3,
    }
}

/// Integer content of a polynomial with rational coefficients.
pub fn integer_content(p: &Poly<Rational>) -> Option<Integer> {
    use num_integer::Integer as _;
    p.coeffs().iter().try_fold(Integer::from(0), |g, c| c.is_integer().then(|| g.gcd(c.numer())))
}

/// Coefficient of `x^(n-k)` in `P_n(a, x)` is an integer for even `k` and an
/// integer multiple of `a` for odd `k`.
pub fn shen_parity_holds(sp: &ShenPoly) -> bool {
    let n = sp.n as usize;
    (0..=n).all(|k| {
        let c = sp.p.coeff(n - k).cloned().unwrap_or_else(Poly::zero);
        let integral = c.coeffs().iter().all(|q| q.is_integer());
        let shape = if k % 2 == 0 {
            c.degree().map_or(true, |d| d == 0)
        } else {
            c.degree().map_or(true, |d| d == 1) && c.coeff(0).map_or(true, |q| q.is_zero())
        };
        integral && shape
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64(cs)
    }

    #[test]
    fn family_examples() {
        let a = family_poly(FamilyKind::CubicA, &int(2)).unwrap();
        assert_eq!(a.p, p(&[-1, -5, -2, 1]));
        let e = family_poly(FamilyKind::SexticE, &int(1)).unwrap();
        assert_eq!(e.p, p(&[1, 8, 5, -20, -20, -2, 1]));
        let c = family_poly(FamilyKind::WashingtonC, &int(1)).unwrap();
        assert_eq!(c.p, p(&[1, 8, 14, 7, 1]));
        assert_eq!(c.p, washington_pt(&int(1)));
        assert!(family_poly(FamilyKind::WashingtonC, &int(0)).is_err());
    }

    #[test]
    fn m_at_single_points() {
        for t in 0..5 {
            assert!(verify_m(&family_poly(FamilyKind::CubicA, &int(t)).unwrap()));
        }
        assert!(verify_m(&family_poly(FamilyKind::QuinticD, &int(2)).unwrap()));
        assert!(verify_m(&family_poly(FamilyKind::WashingtonC, &rat(-3, 2)).unwrap()));
    }

    #[test]
    fn integer_path_agrees() {
        for kind in FamilyKind::ALL {
            for t in [2, -3] {
                let spec = family_poly(kind, &int(t)).unwrap();
                assert!(verify_m(&spec));
                assert!(spec.murphy_remainder().is_zero());
                let mut wrong = spec.clone();
                wrong.sigma_num = &wrong.sigma_num + &Poly::one();
                assert!(!verify_m(&wrong), "{kind}");
                assert!(!wrong.murphy_remainder().is_zero());
            }
        }
    }

    #[test]
    fn family_proofs() {
        for kind in FamilyKind::ALL {
            let r = verify_m_family(kind);
            assert!(r.pass(), "{kind} {:?}", r.failures);
        }
    }

    #[test]
    fn bounds() {
        let b = m_degree_bound(FamilyKind::CubicA);
        assert_eq!((b.deg_x, b.deg_t), (2, 0));
        assert!(m_degree_bound(FamilyKind::QuinticD).bound > 100);
    }

    #[test]
    fn orders() {
        for kind in FamilyKind::ALL {
            for t in [1, 3, -4] {
                let s = family_poly(kind, &int(t)).unwrap();
                assert_eq!(s.sigma_order(12).unwrap(), Some(kind.degree()), "{kind} {t}");
            }
        }
    }

    #[test]
    fn diffgen_quartic_and_quintic() {
        let s = family_poly(FamilyKind::QuarticB, &int(5)).unwrap();
        assert!(s.diffgen_holds(3).unwrap());
        assert_eq!(s.conjugate_product(3).unwrap(), family_poly(FamilyKind::QuarticB, &int(-5)).unwrap().p);
        for t in [0, 1, -2] {
            let t = int(t);
            let s = family_poly(FamilyKind::QuinticD, &t).unwrap();
            let f2 = quintic_f2(&t);
            assert_eq!(s.conjugate_product(2).unwrap(), f2);
            assert_eq!(s.conjugate_product(3).unwrap(), neg_reciprocal(&f2));
            assert_eq!(s.conjugate_product(4).unwrap(), neg_reciprocal(&s.p));
            assert!(s.diffgen_holds(2).unwrap());
        }
        assert_eq!(quintic_f2(&int(0)), p(&[-1, -10, -25, -5, 5, 1]));
    }

    #[test]
    fn z_element() {
        for t in [1, 0, -3, 7] {
            assert!(cubic_z_check(&int(t)).unwrap());
        }
    }

    #[test]
    fn washington() {
        for t in [1, 3, -5] {
            assert!(washington_equiv(&int(t)).unwrap().all_pass(), "{t}");
        }
        assert!(washington_equiv(&int(0)).is_err());
        assert!(washington_equiv(&int(-2)).is_err());
    }

    #[test]
    fn shen_small() {
        let a = Poly::new(vec![int(0), int(1)]);
        let p4 = shen_build(4).unwrap();
        let expect: ParamPoly =
            Poly::new(vec![Poly::constant(int(1)), a.clone(), Poly::constant(int(-6)), -&a, Poly::constant(int(1))]);
        assert_eq!(p4.p, expect);
        assert_eq!(shen_build(2).unwrap().at(&int(3)), p(&[-1, -3, 1]));
        assert_eq!(shen_build(8).unwrap().at(&int(1)), p(&[1, 1, -28, -7, 70, 7, -28, -1, 1]));
        for n in 2..=6 {
            assert!(shen_disc_check(n).unwrap(), "{n}");
        }
        assert!(shen_build(1).is_err());
    }

    #[test]
    fn shen_v_doubling_and_content() {
        for n in 1..=8u32 {
            assert_eq!(shen_v(2 * n), &shen_q(n) * &shen_v(n).scale_rational(&int(2)));
        }
        for n in 2..=16u32 {
            assert_eq!(integer_content(&shen_v(n)), Some(Integer::from(1u64 << v2(n))));
            assert!(shen_parity_holds(&shen_build(n).unwrap()));
        }
    }

    #[test]
    fn lambda_small() {
        let r = lambda_cycle_check(4, &int(1), 128).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn shen_octic() {
        for a in [1, 2, -3] {
            let a = int(a);
            let (order, c) = shen_octic_f3(&a).unwrap();
            assert_eq!(order, 8);
            assert_eq!(c, shen_octic_f3_expected(&a));
        }
        for x in [2, 3, -5] {
            assert_eq!(shen_octic_m_at(&int(x)), Some(true));
        }
    }

    #[test]
    fn order10() {
        let r = order10_check(5);
        assert!(r.m10_scalar && !r.m5_scalar);
        assert!(r.holds_for(1) && r.holds_for(7));
        assert!(!r.holds_for(3));
        assert!(r.y3_under_f3);
    }
}
