use super::Poly;
use crate::error::{Error, Result};
use crate::ring::Field;

/// Arithmetic in `K[x]/(modulus)` for a field `K`, elements kept reduced.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRing<R> {
    modulus: Poly<R>,
}

impl<R: Field> QuotientRing<R> {
    pub fn new(modulus: Poly<R>) -> Result<Self> {
        match modulus.degree() {
            Some(d) if d >= 1 => Ok(QuotientRing { modulus: modulus.monic() }),
            _ => Err(Error::InvalidArgument("modulus must have positive degree".into())),
        }
    }

    pub fn modulus(&self) -> &Poly<R> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn reduce(&self, f: &Poly<R>) -> Poly<R> {
        f.rem(&self.modulus).expect("monic modulus")
    }

    pub fn mul(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        self.reduce(&(a * b))
    }

    pub fn pow(&self, a: &Poly<R>, e: u32) -> Poly<R> {
        let like = self.modulus.lc().unwrap();
        let mut acc = Poly::constant(like.one_like());
        let mut base = self.reduce(a);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: &Poly<R>) -> Result<Poly<R>> {
        let like = self.modulus.lc().unwrap().clone();
        let (mut r0, mut r1) = (self.modulus.clone(), self.reduce(a));
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(like.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let t = &t0 - &(&q * &t1);
            r0 = core::mem::replace(&mut r1, r);
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        let c = r0.lc().unwrap().inv().ok_or(Error::NotInvertible)?;
        Ok(self.reduce(&t0.scale(&c)))
    }

    pub fn div(&self, a: &Poly<R>, b: &Poly<R>) -> Result<Poly<R>> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `f(g) mod modulus`.
    pub fn compose(&self, f: &Poly<R>, g: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for c in f.coeffs().iter().rev() {
            acc = &self.mul(&acc, g) + &Poly::constant(c.clone());
        }
        self.reduce(&acc)
    }

    /// Evaluates a rational map `num/den` at `g`.
    pub fn apply_fraction(&self, num: &Poly<R>, den: &Poly<R>, g: &Poly<R>) -> Result<Poly<R>> {
        let n = self.compose(num, g);
        let d = self.compose(den, g);
        self.div(&n, &d)
    }

    pub fn is_zero(&self, f: &Poly<R>) -> bool {
        self.reduce(f).is_zero()
    }
}
