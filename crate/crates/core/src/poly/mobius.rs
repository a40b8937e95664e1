use super::Poly;
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// `x -> (a x + b)/(c x + d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusMap<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> MobiusMap<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Result<Self> {
        let m = MobiusMap { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::InvalidArgument("degenerate linear fractional map".into()));
        }
        Ok(m)
    }

    pub fn identity_like(like: &R) -> Self {
        MobiusMap { a: like.one_like(), b: like.zero_like(), c: like.zero_like(), d: like.one_like() }
    }

    pub fn det(&self) -> R {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// Matrix product; as maps, `self` applied after `inner`.
    pub fn after(&self, inner: &MobiusMap<R>) -> MobiusMap<R> {
        MobiusMap {
            a: self.a.clone() * inner.a.clone() + self.b.clone() * inner.c.clone(),
            b: self.a.clone() * inner.b.clone() + self.b.clone() * inner.d.clone(),
            c: self.c.clone() * inner.a.clone() + self.d.clone() * inner.c.clone(),
            d: self.c.clone() * inner.b.clone() + self.d.clone() * inner.d.clone(),
        }
    }

    pub fn power(&self, k: u32) -> MobiusMap<R> {
        let mut acc = MobiusMap::identity_like(&self.a);
        for _ in 0..k {
            acc = self.after(&acc);
        }
        acc
    }

    /// True when the matrix is a scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// `(c x + d)^deg(p) p((a x + b)/(c x + d))`.
    pub fn transform(&self, p: &Poly<R>) -> Poly<R> {
        let Some(n) = p.degree() else {
            return Poly::zero();
        };
        let num = Poly::new(alloc::vec![self.b.clone(), self.a.clone()]);
        let den = Poly::new(alloc::vec![self.d.clone(), self.c.clone()]);
        let mut acc = Poly::zero();
        for (k, coef) in p.coeffs().iter().enumerate() {
            let term = &(&num.pow(k as u32) * &den.pow((n - k) as u32)) * &Poly::constant(coef.clone());
            acc = &acc + &term;
        }
        acc
    }
}

impl<R: Field> MobiusMap<R> {
    pub fn apply(&self, x: &R) -> Option<R> {
        let den = self.c.clone() * x.clone() + self.d.clone();
        Some((self.a.clone() * x.clone() + self.b.clone()) * den.inv()?)
    }

    pub fn inverse(&self) -> MobiusMap<R> {
        MobiusMap { a: self.d.clone(), b: -self.b.clone(), c: -self.c.clone(), d: self.a.clone() }
    }

    pub fn transform_monic(&self, p: &Poly<R>) -> Poly<R> {
        self.transform(p).monic()
    }
}
