//! Multi-precision reals, complex numbers and certified root isolation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign as FSign};
use num_bigint::Sign;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{from_integer, Integer, Rational};
use crate::poly::Poly;

const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 256;
/// Precision ceiling for automatic doubling.
pub const MAX_PRECISION: usize = 8192;

fn exp2i(e: i32) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else if e >= -1074 {
        f64::from_bits(1u64 << (e + 1074))
    } else {
        0.0
    }
}

fn consts() -> Consts {
    Consts::new().expect("constant cache")
}

/// A binary floating point number carrying its working precision.
#[derive(Clone, Debug)]
pub struct Real {
    v: BigFloat,
    p: usize,
}

impl Real {
    fn wrap(v: BigFloat, p: usize) -> Real {
        Real { v, p }
    }

    pub fn zero(p: usize) -> Real {
        Real::wrap(BigFloat::new(p), p)
    }

    pub fn from_i64(n: i64, p: usize) -> Real {
        Real::wrap(BigFloat::from_i64(n, p), p)
    }

    pub fn from_f64(f: f64, p: usize) -> Real {
        Real::wrap(BigFloat::from_f64(f, p), p)
    }

    /// `2^e`, exactly.
    pub fn pow2(e: i32, p: usize) -> Real {
        Real::wrap(BigFloat::from_words(&[1u64 << 63], FSign::Pos, e + 1), p)
    }

    pub fn from_integer(n: &Integer, p: usize) -> Real {
        let (sign, digits) = n.to_u64_digits();
        if digits.is_empty() {
            return Real::zero(p);
        }
        let s = if sign == Sign::Minus { FSign::Neg } else { FSign::Pos };
        let e = (64 * digits.len()) as i32;
        let exact = BigFloat::from_words(&digits, s, e);
        let mut v = exact;
        if v.set_precision(p.max(64 * digits.len()), RM).is_err() {
            return Real::wrap(BigFloat::nan(None), p);
        }
        Real::wrap(v, p)
    }

    pub fn from_rational(q: &Rational, p: usize) -> Real {
        let n = Real::from_integer(q.numer(), p);
        if q.denom() == &Integer::from(1) {
            let mut v = n.v;
            let _ = v.set_precision(p, RM);
            return Real::wrap(v, p);
        }
        let d = Real::from_integer(q.denom(), p);
        Real::wrap(n.v.div(&d.v, p, RM), p)
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn with_precision(&self, p: usize) -> Real {
        let mut v = self.v.clone();
        let _ = v.set_precision(p, RM);
        Real::wrap(v, p)
    }

    pub fn raw(&self) -> &BigFloat {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn abs(&self) -> Real {
        Real::wrap(self.v.abs(), self.p)
    }

    pub fn sqrt(&self) -> Real {
        Real::wrap(self.v.sqrt(self.p, RM), self.p)
    }

    pub fn ln(&self) -> Real {
        Real::wrap(self.v.ln(self.p, RM, &mut consts()), self.p)
    }

    pub fn exp(&self) -> Real {
        Real::wrap(self.v.exp(self.p, RM, &mut consts()), self.p)
    }

    pub fn sin(&self) -> Real {
        Real::wrap(self.v.sin(self.p, RM, &mut consts()), self.p)
    }

    pub fn cos(&self) -> Real {
        Real::wrap(self.v.cos(self.p, RM, &mut consts()), self.p)
    }

    pub fn atan(&self) -> Real {
        Real::wrap(self.v.atan(self.p, RM, &mut consts()), self.p)
    }

    pub fn pi(p: usize) -> Real {
        Real::wrap(consts().pi(p, RM), p)
    }

    pub fn powi(&self, n: usize) -> Real {
        Real::wrap(self.v.powi(n, self.p, RM), self.p)
    }

    pub fn recip(&self) -> Real {
        Real::wrap(self.v.reciprocal(self.p, RM), self.p)
    }

    pub fn max(&self, o: &Real) -> Real {
        if self >= o {
            self.clone()
        } else {
            o.clone()
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |self| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return if self.v.is_nan() { f64::NAN } else { 0.0 };
        };
        let Some(&top) = words.last() else {
            return 0.0;
        };
        if top == 0 {
            return 0.0;
        }
        let mant = top as f64 / 18446744073709551616.0;
        let v = mant * exp2i(e);
        if sign == FSign::Neg {
            -v
        } else {
            v
        }
    }

    /// The exact dyadic rational held by `self`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.v.is_zero() {
            return Some(crate::exact::zero());
        }
        let (words, _, sign, e, _) = self.v.as_raw_parts()?;
        let mut n = Integer::from(0);
        for w in words.iter().rev() {
            n = (n << 64) + Integer::from(*w);
        }
        if sign == FSign::Neg {
            n = -n;
        }
        let shift = e as i64 - 64 * words.len() as i64;
        let q = from_integer(&n);
        Some(if shift >= 0 {
            q * from_integer(&(Integer::from(1) << shift as usize))
        } else {
            q / from_integer(&(Integer::from(1) << (-shift) as usize))
        })
    }

    /// Nearest integer.
    pub fn round_integer(&self) -> Option<Integer> {
        let q = self.to_rational()?;
        let two = Rational::from_integer(Integer::from(2));
        let h = (q * &two + Rational::from_integer(Integer::from(1))) / two;
        Some(h.floor().to_integer())
    }

    pub fn to_decimal(&self) -> String {
        self.v.format(Radix::Dec, RM, &mut consts()).unwrap_or_else(|_| String::from("NaN"))
    }
}

impl PartialEq for Real {
    fn eq(&self, o: &Real) -> bool {
        self.v.cmp(&o.v) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Real) -> Option<Ordering> {
        self.v.cmp(&o.v).map(|c| c.cmp(&0))
    }
}

macro_rules! real_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for &Real {
            type Output = Real;
            fn $f(self, o: &Real) -> Real {
                let p = self.p.max(o.p);
                Real::wrap(self.v.$f(&o.v, p, RM), p)
            }
        }
        impl $tr for Real {
            type Output = Real;
            fn $f(self, o: Real) -> Real {
                (&self).$f(&o)
            }
        }
    };
}
real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.clone().neg(), self.p)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// A complex number with [`Real`] parts.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Complex {
        Complex { re, im }
    }

    pub fn real(re: Real) -> Complex {
        let p = re.p;
        Complex { re, im: Real::zero(p) }
    }

    pub fn zero(p: usize) -> Complex {
        Complex::real(Real::zero(p))
    }

    pub fn one(p: usize) -> Complex {
        Complex::real(Real::from_i64(1, p))
    }

    pub fn from_rational(q: &Rational, p: usize) -> Complex {
        Complex::real(Real::from_rational(q, p))
    }

    pub fn from_c64(z: Complex64, p: usize) -> Complex {
        Complex::new(Real::from_f64(z.re, p), Real::from_f64(z.im, p))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn with_precision(&self, p: usize) -> Complex {
        Complex::new(self.re.with_precision(p), self.im.with_precision(p))
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, r: &Real) -> Complex {
        Complex::new(&self.re * r, &self.im * r)
    }

    pub fn recip(&self) -> Complex {
        let n = self.norm_sqr();
        Complex::new(&self.re / &n, -(&self.im / &n))
    }

    /// Evaluates a rational polynomial at `self`.
    pub fn eval(&self, coeffs: &[Complex]) -> Complex {
        let p = self.re.p;
        let mut acc = Complex::zero(p);
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + c;
        }
        acc
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex::new(&(&self.re * &o.re) - &(&self.im * &o.im), &(&self.re * &o.im) + &(&self.im * &o.re))
    }
}

impl Div for &Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        let n = o.norm_sqr();
        let re = &(&self.re * &o.re) + &(&self.im * &o.im);
        let im = &(&self.im * &o.re) - &(&self.re * &o.im);
        Complex::new(&re / &n, &im / &n)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

/// A disk in the complex plane known to contain exactly one root.
#[derive(Clone, Debug)]
pub struct Ball {
    pub center: Complex,
    pub radius: Real,
    pub is_real: bool,
}

/// Certified roots of a squarefree rational polynomial.
///
/// Real roots come first in increasing order, followed by conjugate pairs
/// `(z, conj z)` with `Im z > 0`.
#[derive(Clone, Debug)]
pub struct EmbeddingSet {
    pub poly: Poly<Rational>,
    pub precision: usize,
    pub roots: Vec<Ball>,
    pub real_count: usize,
}

impl EmbeddingSet {
    pub fn complex_pairs(&self) -> usize {
        (self.roots.len() - self.real_count) / 2
    }

    pub fn centers(&self) -> Vec<Complex> {
        self.roots.iter().map(|b| b.center.clone()).collect()
    }

    pub fn real_roots(&self) -> Vec<Real> {
        self.roots[..self.real_count].iter().map(|b| b.center.re.clone()).collect()
    }

    /// One representative of each archimedean place: all real roots, then
    /// one root from each conjugate pair.
    pub fn places(&self) -> Vec<Complex> {
        let mut out: Vec<Complex> = self.real_roots().into_iter().map(Complex::real).collect();
        out.extend(self.roots[self.real_count..].iter().step_by(2).map(|b| b.center.clone()));
        out
    }

    pub fn max_radius(&self) -> Real {
        let mut r = Real::zero(self.precision);
        for b in &self.roots {
            r = r.max(&b.radius);
        }
        r
    }

    /// Smallest distance between two root centers.
    pub fn min_separation(&self) -> Real {
        let mut best: Option<Real> = None;
        for i in 0..self.roots.len() {
            for j in i + 1..self.roots.len() {
                let d = (&self.roots[i].center - &self.roots[j].center).abs();
                best = Some(match best {
                    Some(b) if b <= d => b,
                    _ => d,
                });
            }
        }
        best.unwrap_or_else(|| Real::from_i64(1, self.precision))
    }
}

fn f64_coeffs(p: &Poly<Rational>) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect()
}

fn aberth_f64(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lc = c[n];
    let mon: Vec<f64> = c.iter().map(|x| x / lc).collect();
    let bound = 1.0 + mon[..n].iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = 2.0 * core::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(0.5 * bound, th)
        })
        .collect();
    let deriv: Vec<f64> = (1..=n).map(|k| mon[k] * k as f64).collect();
    let ev = |cs: &[f64], x: Complex64| cs.iter().rev().fold(Complex64::new(0.0, 0.0), |a, &b| a * x + b);
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let pv = ev(&mon, z[i]);
            let dv = ev(&deriv, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

struct Refiner {
    coeffs: Vec<Complex>,
    deriv: Vec<Complex>,
    abs_coeffs: Vec<Real>,
}

impl Refiner {
    fn new(p: &Poly<Rational>, prec: usize) -> Refiner {
        let coeffs: Vec<Complex> = p.coeffs().iter().map(|c| Complex::from_rational(c, prec)).collect();
        let deriv: Vec<Complex> = p.derivative().coeffs().iter().map(|c| Complex::from_rational(c, prec)).collect();
        let abs_coeffs = coeffs.iter().map(|c| c.re.abs()).collect();
        Refiner { coeffs, deriv, abs_coeffs }
    }

    fn aberth(&self, z: &mut [Complex], prec: usize) {
        let n = z.len();
        let tol = Real::pow2(-(prec as i32) + 12, prec);
        for _ in 0..4 * (prec / 16 + 8) {
            let mut worst = Real::zero(prec);
            for i in 0..n {
                let pv = z[i].eval(&self.coeffs);
                if pv.is_zero() {
                    continue;
                }
                let dv = z[i].eval(&self.deriv);
                let ratio = &pv / &dv;
                let mut s = Complex::zero(prec);
                for j in 0..n {
                    if j != i {
                        let d = &z[i] - &z[j];
                        if !d.is_zero() {
                            s = &s + &d.recip();
                        }
                    }
                }
                let denom = &Complex::one(prec) - &(&ratio * &s);
                let step = &ratio / &denom;
                if !step.re.is_finite() || !step.im.is_finite() {
                    continue;
                }
                z[i] = &z[i] - &step;
                let rel = &step.abs() / &(&Real::from_i64(1, prec) + &z[i].abs());
                worst = worst.max(&rel);
            }
            if worst < tol {
                break;
            }
        }
    }

    fn radii(&self, z: &[Complex], prec: usize) -> Vec<Real> {
        let n = z.len();
        let lc = &self.coeffs[n];
        let eps = Real::pow2(-(prec as i32) + 4, prec);
        let nn = Real::from_i64(n as i64 + 2, prec);
        (0..n)
            .map(|i| {
                let pv = z[i].eval(&self.coeffs);
                let za = z[i].abs();
                let mut bound = Real::zero(prec);
                for c in self.abs_coeffs.iter().rev() {
                    bound = &(&bound * &za) + c;
                }
                let err = &(&bound * &eps) * &nn;
                let mut prod = lc.clone();
                for j in 0..n {
                    if j != i {
                        prod = &prod * &(&z[i] - &z[j]);
                    }
                }
                let w = &(&pv.abs() + &err) / &prod.abs();
                let grow = &Real::from_i64(1, prec) + &Real::pow2(-20, prec);
                &(&w * &Real::from_i64(n as i64, prec)) * &grow
            })
            .collect()
    }
}

fn try_certify(z: &[Complex], radii: &[Real]) -> Option<(Vec<Ball>, usize)> {
    let n = z.len();
    for i in 0..n {
        if !radii[i].is_finite() {
            return None;
        }
        for j in i + 1..n {
            let d = (&z[i] - &z[j]).abs();
            if d <= &radii[i] + &radii[j] {
                return None;
            }
        }
    }
    let mut real = Vec::new();
    let mut upper = Vec::new();
    for i in 0..n {
        let im_abs = z[i].im.abs();
        if im_abs > radii[i] {
            if !z[i].im.is_negative() {
                upper.push(i);
            }
            continue;
        }
        let c = z[i].conj();
        let alone = (0..n).all(|j| j == i || (&c - &z[j]).abs() > &radii[i] + &radii[j]);
        if !alone {
            return None;
        }
        real.push(i);
    }
    if real.len() + 2 * upper.len() != n {
        return None;
    }
    real.sort_by(|&a, &b| z[a].re.partial_cmp(&z[b].re).unwrap_or(Ordering::Equal));
    upper.sort_by(|&a, &b| z[a].re.partial_cmp(&z[b].re).unwrap_or(Ordering::Equal));
    let mut balls = Vec::with_capacity(n);
    for &i in &real {
        balls.push(Ball { center: Complex::real(z[i].re.clone()), radius: radii[i].clone(), is_real: true });
    }
    for &i in &upper {
        balls.push(Ball { center: z[i].clone(), radius: radii[i].clone(), is_real: false });
        balls.push(Ball { center: z[i].conj(), radius: radii[i].clone(), is_real: false });
    }
    Some((balls, real.len()))
}

/// Certified isolation of all complex roots of a squarefree polynomial.
///
/// Precision doubles from `precision` up to [`MAX_PRECISION`] until all
/// inclusion disks are disjoint and every root is decided real or non-real.
pub fn complex_roots(p: &Poly<Rational>, precision: usize) -> Result<EmbeddingSet> {
    complex_roots_capped(p, precision, MAX_PRECISION)
}

pub fn complex_roots_capped(p: &Poly<Rational>, precision: usize, cap: usize) -> Result<EmbeddingSet> {
    let n = p.degree().ok_or_else(|| Error::InvalidArgument("zero polynomial has no roots".into()))?;
    if n == 0 {
        return Ok(EmbeddingSet { poly: p.clone(), precision, roots: vec![], real_count: 0 });
    }
    if !p.is_squarefree().map_err(|_| Error::RepeatedRoots)? {
        return Err(Error::RepeatedRoots);
    }
    if n == 1 {
        let r = -(&p.coeffs()[0] / &p.coeffs()[1]);
        let c = Complex::from_rational(&r, precision);
        return Ok(EmbeddingSet {
            poly: p.clone(),
            precision,
            roots: vec![Ball { center: c, radius: Real::zero(precision), is_real: true }],
            real_count: 1,
        });
    }
    let seeds = aberth_f64(&f64_coeffs(p));
    let mut prec = precision.max(64);
    let mut z: Vec<Complex> = seeds.iter().map(|s| Complex::from_c64(*s, prec)).collect();
    loop {
        let refiner = Refiner::new(p, prec);
        refiner.aberth(&mut z, prec);
        let radii = refiner.radii(&z, prec);
        if let Some((roots, real_count)) = try_certify(&z, &radii) {
            if prec >= precision {
                return Ok(EmbeddingSet { poly: p.clone(), precision: prec, roots, real_count });
            }
        }
        if prec * 2 > cap {
            return Err(Error::PrecisionExceeded { bits: prec });
        }
        prec *= 2;
        z = z.iter().map(|c| c.with_precision(prec)).collect();
    }
}

/// Number of real roots of `p`, counted with multiplicity.
pub fn real_root_count(p: &Poly<Rational>, precision: usize) -> Result<usize> {
    let mut total = 0;
    for (f, mult) in p.squarefree_decomposition()? {
        if f.degree().unwrap_or(0) == 0 {
            continue;
        }
        total += mult * complex_roots(&f, precision)?.real_count;
    }
    Ok(total)
}

/// Best rational approximation of `x` with denominator at most `cap`,
/// from the continued fraction of the exact dyadic value.
pub fn reconstruct_rational(x: &Real, cap: &Integer) -> Option<Rational> {
    let q = x.to_rational()?;
    let one = Integer::from(1);
    let (mut h0, mut h1) = (Integer::from(0), one.clone());
    let (mut k0, mut k1) = (one.clone(), Integer::from(0));
    let mut rest = q;
    let mut best = None;
    for _ in 0..4096 {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > cap {
            break;
        }
        best = Some(Rational::new(h2.clone(), k2.clone()));
        h0 = core::mem::replace(&mut h1, h2);
        k0 = core::mem::replace(&mut k1, k2);
        let frac = &rest - Rational::from_integer(a);
        if frac == crate::exact::zero() {
            break;
        }
        rest = frac.recip();
    }
    best
}

/// `|a - b| <= tol`, with `tol = 2^-bits`.
pub fn close(a: &Real, b: &Real, bits: i32) -> bool {
    let p = a.precision().max(b.precision());
    (a - b).abs() <= Real::pow2(-bits, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::murphy::{octic, washington_pt, Params};

    #[test]
    fn quadratic_roots() {
        let p = Poly::from_i64(&[1, -3, 1]);
        let e = complex_roots(&p, 128).unwrap();
        assert_eq!(e.real_count, 2);
        let five = Real::from_i64(5, 128).sqrt();
        let hi = &(&Real::from_i64(3, 128) + &five) / &Real::from_i64(2, 128);
        assert!(close(&e.real_roots()[1], &hi, 120));
    }

    #[test]
    fn octic_counts() {
        let t = octic(&Params::new(int(-3), int(1)));
        assert_eq!(complex_roots(&t, 128).unwrap().real_count, 8);
        let t = octic(&Params::new(int(3), int(-6)));
        assert_eq!(complex_roots(&t, 128).unwrap().real_count, 0);
        assert_eq!(complex_roots(&washington_pt(&int(1)), 128).unwrap().real_count, 4);
    }

    #[test]
    fn repeated_roots_rejected() {
        let p = Poly::from_i64(&[1, 2, 1]);
        assert!(matches!(complex_roots(&p, 64), Err(Error::RepeatedRoots)));
        assert_eq!(real_root_count(&p, 64).unwrap(), 2);
    }

    #[test]
    fn conversions() {
        let q = crate::exact::rat(-7, 3);
        let r = Real::from_rational(&q, 256);
        assert!((r.to_f64() + 7.0 / 3.0).abs() < 1e-15);
        let back = reconstruct_rational(&r, &Integer::from(1000)).unwrap();
        assert_eq!(back, q);
        let big = Integer::from(5) << 200;
        assert_eq!(Real::from_integer(&big, 64).to_rational().unwrap(), from_integer(&big));
    }

    #[test]
    fn product_of_roots_is_constant_term() {
        let t = octic(&Params::new(int(1), int(0)));
        let e = complex_roots(&t, 256).unwrap();
        let mut prod = Complex::one(e.precision);
        for b in &e.roots {
            prod = &prod * &b.center;
        }
        assert!(close(&prod.re, &Real::from_i64(1, 256), 200));
        assert!(close(&prod.im, &Real::zero(256), 200));
    }
}
