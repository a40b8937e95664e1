//! Dense univariate polynomials over an exact ring.

mod mobius;
mod modular;
pub mod resultant;
mod text;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

pub use mobius::MobiusMap;
pub use modular::QuotientRing;
pub use text::{format_poly, parse_poly};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::ring::{ContextFree, Field, Ring};

/// Coefficients in ascending degree, never with a trailing zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        Poly::new(v)
    }

    /// The variable, built in the context of `like`.
    pub fn x_like(like: &R) -> Self {
        Poly::new(vec![like.zero_like(), like.one_like()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    /// Coefficient of `x^k`, zero (in the context of `like`) past the degree.
    pub fn coeff_or_zero(&self, k: usize, like: &R) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| like.zero_like())
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    fn some_element(&self) -> Option<&R> {
        self.coeffs.first()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        match self.some_element() {
            None => Poly::zero(),
            Some(e) => {
                let mut v = vec![e.zero_like(); k];
                v.extend(self.coeffs.iter().cloned());
                Poly { coeffs: v }
            }
        }
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Horner evaluation in a ring `S` receiving the coefficients through `f`.
    pub fn eval_in<S: Ring>(&self, x: &S, f: impl Fn(&R) -> S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + f(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Integer power; the zero polynomial stays zero (it carries no context
    /// to build a one from).
    pub fn pow(&self, e: u32) -> Self {
        let Some(el) = self.some_element() else {
            return Poly::zero();
        };
        let mut acc = Poly::constant(el.one_like());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Division with remainder; needs the leading coefficient of `d` to divide
    /// every leading coefficient met along the way.
    pub fn divrem(&self, d: &Poly<R>) -> Result<(Poly<R>, Poly<R>)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc = d.lc().unwrap();
        let Some(n) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if n < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let zero = lc.zero_like();
        let mut quo = vec![zero.clone(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(lc).ok_or(Error::NotInvertible)?;
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * di.clone();
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quo), Poly::new(rem)))
    }

    pub fn rem(&self, d: &Poly<R>) -> Result<Poly<R>> {
        Ok(self.divrem(d)?.1)
    }

    pub fn exact_quotient(&self, d: &Poly<R>) -> Option<Poly<R>> {
        match self.divrem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, p: &Poly<R>) -> bool {
        p.exact_quotient(self).is_some()
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d` without any division.
    pub fn pseudo_rem(&self, d: &Poly<R>) -> Result<Poly<R>> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc = d.lc().unwrap().clone();
        let Some(n) = self.degree() else {
            return Ok(Poly::zero());
        };
        if n < dd {
            return Ok(self.clone());
        }
        let mut r = self.clone();
        let mut steps = n - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let top = r.lc().unwrap().clone();
            let t = Poly::monomial(top, rd - dd);
            r = &r.scale(&lc) - &(&t * d);
            steps -= 1;
        }
        Ok(r.scale(&lc.pow(steps as u32)))
    }

    /// `x^deg * self(1/x)`.
    pub fn reversed(&self, deg: usize) -> Poly<R> {
        let Some(e) = self.some_element() else {
            return Poly::zero();
        };
        let mut v = vec![e.zero_like(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[deg - k] = c.clone();
        }
        Poly::new(v)
    }

    /// `self(-x)`.
    pub fn negate_variable(&self) -> Poly<R> {
        Poly::new(
            self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }).collect(),
        )
    }

    pub fn resultant(&self, q: &Poly<R>) -> R {
        resultant::resultant(self, q)
    }

    pub fn discriminant(&self) -> Result<R> {
        resultant::discriminant(self)
    }
}

impl<R: Field> Poly<R> {
    pub fn monic(&self) -> Poly<R> {
        match self.lc().and_then(|c| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, q: &Poly<R>) -> Result<Poly<R>> {
        let mut a = self.clone();
        let mut b = q.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }

    /// Yun's decomposition into `(factor, multiplicity)` with squarefree,
    /// pairwise coprime monic factors.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly<R>, usize)>> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let (mut b, _) = f.divrem(&a0)?;
        let (c, _) = df.divrem(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            let (nb, _) = b.divrem(&a)?;
            let (c, _) = d.divrem(&a)?;
            b = nb;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<Poly<R>> {
        let g = self.gcd(&self.derivative())?;
        Ok(self.divrem(&g)?.0.monic())
    }
}

impl<R: ContextFree> Poly<R> {
    pub fn x() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn from_rationals(qs: &[Rational]) -> Self {
        Poly::new(qs.iter().map(R::from_rational).collect())
    }
}

impl Poly<Rational> {
    pub fn from_i64(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| crate::exact::int(c)).collect())
    }
}

fn add_coeffs<R: Ring>(a: &[R], b: &[R], neg: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => {
                if neg {
                    x.clone() - y.clone()
                } else {
                    x.clone() + y.clone()
                }
            }
            (Some(x), None) => x.clone(),
            (None, Some(y)) => {
                if neg {
                    -y.clone()
                } else {
                    y.clone()
                }
            }
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    out
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &Poly<R>) -> Poly<R> {
        Poly::new(add_coeffs(&self.coeffs, &o.coeffs, false))
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &Poly<R>) -> Poly<R> {
        Poly::new(add_coeffs(&self.coeffs, &o.coeffs, true))
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: Poly<R>) -> Poly<R> {
        &self + &o
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: Poly<R>) -> Poly<R> {
        &self - &o
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: Poly<R>) -> Poly<R> {
        &self * &o
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

/// Polynomials over a context-free ring form a ring again; this is how the
/// one-parameter ring `Q[a]` is used as a coefficient type.
impl<R: ContextFree> Ring for Poly<R> {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn rational_like(&self, q: &Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.exact_quotient(d)
    }
}

impl<R: ContextFree> ContextFree for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64(cs)
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn root_substitution_remainder() {
        let r = p(&[-1, 0, 1]).rem(&p(&[-1, 1])).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn division_identity() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = p(&[2, 0, 7]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
        assert!(a.divrem(&Poly::zero()).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 3]);
        let b = &p(&[-1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn compose_and_eval() {
        let f = p(&[1, 0, 1]);
        let g = p(&[1, 1]);
        assert_eq!(f.compose(&g), p(&[2, 2, 1]));
        assert_eq!(f.eval(&rat(1, 2)), rat(5, 4));
    }

    #[test]
    fn pseudo_remainder() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        let pr = a.pseudo_rem(&b).unwrap();
        let r = a.rem(&b).unwrap();
        assert_eq!(pr, r.scale(&int(4)));
    }

    #[test]
    fn yun_decomposition() {
        let a = p(&[1, 1]);
        let b = p(&[-2, 0, 1]);
        let f = &(&a * &a) * &(&(&b * &b) * &b);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, alloc::vec![(a.clone(), 2), (b.clone(), 3)]);
        assert_eq!(f.squarefree_part().unwrap(), &a * &b);
    }

    #[test]
    fn polynomials_as_coefficients() {
        // (x - a)(x + a) = x^2 - a^2 over Q[a]
        let a = Poly::<Rational>::x();
        let lin1 = Poly::new(alloc::vec![-a.clone(), Poly::one()]);
        let lin2 = Poly::new(alloc::vec![a.clone(), Poly::one()]);
        let prod = &lin1 * &lin2;
        assert_eq!(prod.coeffs()[0], -(&a * &a));
        let (q, r) = prod.divrem(&lin1).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, lin2);
    }
}
