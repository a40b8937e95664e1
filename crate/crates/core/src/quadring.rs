//! Quadratic rings `Q[u]/(u^2 - t u + n)` and the biquadratic ring
//! `Q[s, w]/(s^2 - S, w^2 - W)`.

use alloc::sync::Arc;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{int, rat, zero, Rational};
use crate::poly::Poly;
use crate::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCtx {
    /// `u + u'`.
    pub trace: Rational,
    /// `u u'`.
    pub norm: Rational,
}

/// `a + b u` with `u^2 = trace u - norm`.
#[derive(Clone, Debug)]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
    ctx: Arc<QuadCtx>,
}

impl PartialEq for QuadElem {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && same_ctx(&self.ctx, &o.ctx)
    }
}

fn same_ctx<T: PartialEq>(a: &Arc<T>, b: &Arc<T>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl QuadCtx {
    /// `u^2 - m u + 1 = 0`.
    pub fn murphy(m: &Rational) -> Arc<QuadCtx> {
        Arc::new(QuadCtx { trace: m.clone(), norm: int(1) })
    }

    pub fn new(trace: Rational, norm: Rational) -> Arc<QuadCtx> {
        Arc::new(QuadCtx { trace, norm })
    }

    pub fn discriminant(&self) -> Rational {
        &self.trace * &self.trace - int(4) * &self.norm
    }
}

impl QuadElem {
    pub fn new(a: Rational, b: Rational, ctx: &Arc<QuadCtx>) -> Self {
        QuadElem { a, b, ctx: ctx.clone() }
    }

    pub fn rational(a: Rational, ctx: &Arc<QuadCtx>) -> Self {
        QuadElem::new(a, zero(), ctx)
    }

    /// The generator `u`.
    pub fn gen(ctx: &Arc<QuadCtx>) -> Self {
        QuadElem::new(zero(), int(1), ctx)
    }

    pub fn ctx(&self) -> &Arc<QuadCtx> {
        &self.ctx
    }

    /// `u -> u'`, i.e. `a + b u -> (a + b t) - b u`.
    pub fn conj(&self) -> Self {
        QuadElem::new(&self.a + &self.b * &self.ctx.trace, -&self.b, &self.ctx)
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b * &self.ctx.trace + &self.b * &self.b * &self.ctx.norm
    }

    pub fn trace(&self) -> Rational {
        int(2) * &self.a + &self.b * &self.ctx.trace
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &o.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(QuadElem::new(&self.a + &o.a, &self.b + &o.b, &self.ctx))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        // b1 b2 u^2 = b1 b2 (t u - n)
        let bb = &self.b * &o.b;
        let a = &self.a * &o.a - &bb * &self.ctx.norm;
        let b = &self.a * &o.b + &self.b * &o.a + &bb * &self.ctx.trace;
        Ok(QuadElem::new(a, b, &self.ctx))
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    /// Panics on mismatched contexts; see [`QuadElem::try_add`].
    fn add(self, o: QuadElem) -> QuadElem {
        self.try_add(&o).expect("quadratic ring context mismatch")
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, o: QuadElem) -> QuadElem {
        self.try_add(&-o).expect("quadratic ring context mismatch")
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, o: QuadElem) -> QuadElem {
        self.try_mul(&o).expect("quadratic ring context mismatch")
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.a, -self.b, &self.ctx)
    }
}

impl Ring for QuadElem {
    fn zero_like(&self) -> Self {
        QuadElem::rational(zero(), &self.ctx)
    }
    fn one_like(&self) -> Self {
        QuadElem::rational(int(1), &self.ctx)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn rational_like(&self, q: &Rational) -> Self {
        QuadElem::rational(q.clone(), &self.ctx)
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self.clone() * d.inv()?)
    }
}

impl Field for QuadElem {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadElem::new(c.a / &n, c.b / &n, &self.ctx))
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*u", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiquadCtx {
    pub s2: Rational,
    pub w2: Rational,
}

impl BiquadCtx {
    /// `s^2 = m^2 - 4`, `w^2 = (m + 2 + A)^2 - 4(m - 2)`.
    pub fn murphy(m: &Rational, a: &Rational) -> Arc<BiquadCtx> {
        let s2 = m * m - int(4);
        let t = m + int(2) + a;
        let w2 = &t * &t - int(4) * (m - int(2));
        Arc::new(BiquadCtx { s2, w2 })
    }

    pub fn new(s2: Rational, w2: Rational) -> Arc<BiquadCtx> {
        Arc::new(BiquadCtx { s2, w2 })
    }
}

/// `c0 + c1 s + c2 w + c3 s w`.
#[derive(Clone, Debug)]
pub struct BiquadElem {
    pub c: [Rational; 4],
    ctx: Arc<BiquadCtx>,
}

impl PartialEq for BiquadElem {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c && same_ctx(&self.ctx, &o.ctx)
    }
}

impl BiquadElem {
    pub fn new(c: [Rational; 4], ctx: &Arc<BiquadCtx>) -> Self {
        BiquadElem { c, ctx: ctx.clone() }
    }

    pub fn rational(q: Rational, ctx: &Arc<BiquadCtx>) -> Self {
        BiquadElem::new([q, zero(), zero(), zero()], ctx)
    }

    pub fn s(ctx: &Arc<BiquadCtx>) -> Self {
        BiquadElem::new([zero(), int(1), zero(), zero()], ctx)
    }

    pub fn w(ctx: &Arc<BiquadCtx>) -> Self {
        BiquadElem::new([zero(), zero(), int(1), zero()], ctx)
    }

    pub fn sw(ctx: &Arc<BiquadCtx>) -> Self {
        BiquadElem::new([zero(), zero(), zero(), int(1)], ctx)
    }

    pub fn ctx(&self) -> &Arc<BiquadCtx> {
        &self.ctx
    }

    fn map_signs(&self, s1: bool, s2: bool, s3: bool) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        let f = |c: Rational, neg: bool| if neg { -c } else { c };
        BiquadElem::new([c0, f(c1, s1), f(c2, s2), f(c3, s3)], &self.ctx)
    }

    /// `s -> -s`.
    pub fn conj_s(&self) -> Self {
        self.map_signs(true, false, true)
    }

    /// `w -> -w`.
    pub fn conj_w(&self) -> Self {
        self.map_signs(false, true, true)
    }

    /// `(s, w) -> (-s, -w)`.
    pub fn conj_sw(&self) -> Self {
        self.map_signs(true, true, false)
    }

    /// Product of the four conjugates, always rational.
    pub fn norm(&self) -> Rational {
        let n = self.clone() * self.conj_s() * self.conj_w() * self.conj_sw();
        n.c[0].clone()
    }

    pub fn rational_part(&self) -> &Rational {
        &self.c[0]
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.c[1..].iter().all(Ring::is_zero).then(|| self.c[0].clone())
    }

    /// `(a, b)` with `self = a + b s`, if there is no `w` part.
    pub fn split_s(&self) -> Option<(Rational, Rational)> {
        (self.c[2].is_zero() && self.c[3].is_zero()).then(|| (self.c[0].clone(), self.c[1].clone()))
    }

    /// `(a, b)` with `self = a + b w`, if there is no `s` part.
    pub fn split_w(&self) -> Option<(Rational, Rational)> {
        (self.c[1].is_zero() && self.c[3].is_zero()).then(|| (self.c[0].clone(), self.c[2].clone()))
    }

    /// `(a, b)` with `self = a + b s w`, if there is no `s` or `w` part.
    pub fn split_sw(&self) -> Option<(Rational, Rational)> {
        (self.c[1].is_zero() && self.c[2].is_zero()).then(|| (self.c[0].clone(), self.c[3].clone()))
    }

    /// The image of `a + b u` under `u = (m + s)/2`.
    pub fn from_quad(x: &QuadElem, ctx: &Arc<BiquadCtx>) -> Result<Self> {
        if x.ctx().norm != int(1) || x.ctx().trace.clone() * x.ctx().trace.clone() - int(4) != ctx.s2 {
            return Err(Error::ContextMismatch);
        }
        let half_b = &x.b * rat(1, 2);
        let a = &x.a + &half_b * &x.ctx().trace;
        Ok(BiquadElem::new([a, half_b, zero(), zero()], ctx))
    }

    fn check(&self, o: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &o.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let c = core::array::from_fn(|i| &self.c[i] + &o.c[i]);
        Ok(BiquadElem::new(c, &self.ctx))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let (s, w) = (&self.ctx.s2, &self.ctx.w2);
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let c0 = a0 * b0 + s * (a1 * b1) + w * (a2 * b2) + s * w * (a3 * b3);
        let c1 = a0 * b1 + a1 * b0 + w * (a2 * b3 + a3 * b2);
        let c2 = a0 * b2 + a2 * b0 + s * (a1 * b3 + a3 * b1);
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Ok(BiquadElem::new([c0, c1, c2, c3], &self.ctx))
    }
}

impl Add for BiquadElem {
    type Output = BiquadElem;
    /// Panics on mismatched contexts; see [`BiquadElem::try_add`].
    fn add(self, o: BiquadElem) -> BiquadElem {
        self.try_add(&o).expect("biquadratic ring context mismatch")
    }
}

impl Sub for BiquadElem {
    type Output = BiquadElem;
    fn sub(self, o: BiquadElem) -> BiquadElem {
        self.try_add(&-o).expect("biquadratic ring context mismatch")
    }
}

impl Mul for BiquadElem {
    type Output = BiquadElem;
    fn mul(self, o: BiquadElem) -> BiquadElem {
        self.try_mul(&o).expect("biquadratic ring context mismatch")
    }
}

impl Neg for BiquadElem {
    type Output = BiquadElem;
    fn neg(self) -> BiquadElem {
        BiquadElem::new(self.c.map(|c| -c), &self.ctx)
    }
}

impl Ring for BiquadElem {
    fn zero_like(&self) -> Self {
        BiquadElem::rational(zero(), &self.ctx)
    }
    fn one_like(&self) -> Self {
        BiquadElem::rational(int(1), &self.ctx)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }
    fn rational_like(&self, q: &Rational) -> Self {
        BiquadElem::rational(q.clone(), &self.ctx)
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self.clone() * d.inv()?)
    }
}

impl Field for BiquadElem {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let rest = self.conj_s() * self.conj_w() * self.conj_sw();
        Some(BiquadElem::new(rest.c.map(|c| c / &n), &self.ctx))
    }
}

impl fmt::Display for BiquadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2, c3] = &self.c;
        write!(f, "{c0} + {c1}*s + {c2}*w + {c3}*s*w")
    }
}

/// Splits a polynomial over the biquadratic ring into the rational
/// polynomials multiplying `1, s, w, sw`.
pub fn components(p: &Poly<BiquadElem>) -> [Poly<Rational>; 4] {
    core::array::from_fn(|i| Poly::new(p.coeffs().iter().map(|c| c.c[i].clone()).collect()))
}

/// Rational polynomial, if every coefficient is rational.
pub fn rational_poly(p: &Poly<BiquadElem>) -> Option<Poly<Rational>> {
    let [c0, c1, c2, c3] = components(p);
    (c1.is_zero() && c2.is_zero() && c3.is_zero()).then_some(c0)
}

/// Rational polynomial over `Q[u]`, if every coefficient is rational.
pub fn rational_poly_quad(p: &Poly<QuadElem>) -> Option<Poly<Rational>> {
    let cs: Option<alloc::vec::Vec<Rational>> = p.coeffs().iter().map(|c| c.as_rational()).collect();
    cs.map(Poly::new)
}

/// `tv = (-2m - A) s/2 + (m - 2) w/2 - (m^2 - 4)/2`.
pub fn test_value(m: &Rational, a: &Rational, ctx: &Arc<BiquadCtx>) -> BiquadElem {
    let half = rat(1, 2);
    BiquadElem::new([-(m * m - int(4)) * &half, (-(int(2) * m) - a) * &half, (m - int(2)) * &half, zero()], ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, ctx: &Arc<QuadCtx>) -> QuadElem {
        QuadElem::new(int(a), int(b), ctx)
    }

    #[test]
    fn u_has_norm_one_and_trace_m() {
        let ctx = QuadCtx::murphy(&int(3));
        let u = QuadElem::gen(&ctx);
        assert_eq!(u.clone() * u.conj(), QuadElem::rational(int(1), &ctx));
        assert_eq!(u.norm(), int(1));
        assert_eq!(u.trace(), int(3));
    }

    #[test]
    fn u_minus_one_squared() {
        for m in [-7i64, 1, 3, 11] {
            let ctx = QuadCtx::murphy(&int(m));
            let u = QuadElem::gen(&ctx);
            let one = u.one_like();
            let lhs = (u.clone() - one.clone()) * (u.clone() - one);
            assert_eq!(lhs, u.scale(&int(m - 2)));
        }
    }

    #[test]
    fn conj_is_involution_and_inverse_works() {
        let ctx = QuadCtx::murphy(&rat(5, 3));
        let x = QuadElem::new(rat(2, 7), rat(-3, 4), &ctx);
        assert_eq!(x.conj().conj(), x);
        assert_eq!(x.clone() * x.inv().unwrap(), x.one_like());
    }

    #[test]
    fn mismatched_contexts_error() {
        let a = q(1, 1, &QuadCtx::murphy(&int(3)));
        let b = q(1, 1, &QuadCtx::murphy(&int(4)));
        assert_eq!(a.try_add(&b), Err(Error::ContextMismatch));
        let c1 = BiquadCtx::murphy(&int(3), &int(13));
        let c2 = BiquadCtx::murphy(&int(3), &int(12));
        assert_eq!(BiquadElem::s(&c1).try_mul(&BiquadElem::s(&c2)), Err(Error::ContextMismatch));
    }

    #[test]
    fn biquad_relations() {
        let (m, a) = (int(3), int(13));
        let ctx = BiquadCtx::murphy(&m, &a);
        let s = BiquadElem::s(&ctx);
        assert_eq!((s.clone() * s.clone()).as_rational(), Some(int(5)));
        let u = (s.clone() + s.rational_like(&m)).scale(&rat(1, 2));
        let rel = u.clone() * u.clone() - u.scale(&m) + u.one_like();
        assert!(rel.is_zero());
        assert_eq!(s.conj_s().conj_s(), s);
    }

    #[test]
    fn biquad_norm_is_rational_and_inverse() {
        let ctx = BiquadCtx::murphy(&int(7), &int(-4));
        let x = BiquadElem::new([int(1), rat(1, 2), int(-3), rat(2, 5)], &ctx);
        let prod = x.clone() * x.conj_s() * x.conj_w() * x.conj_sw();
        assert!(prod.as_rational().is_some());
        assert_eq!(x.clone() * x.inv().unwrap(), x.one_like());
    }

    #[test]
    fn quad_embedding_intertwines_conjugation() {
        let m = rat(7, 2);
        let qc = QuadCtx::murphy(&m);
        let bc = BiquadCtx::murphy(&m, &int(1));
        let x = QuadElem::new(rat(1, 3), rat(-5, 2), &qc);
        let y = QuadElem::new(int(4), rat(1, 7), &qc);
        let ex = BiquadElem::from_quad(&x, &bc).unwrap();
        let ey = BiquadElem::from_quad(&y, &bc).unwrap();
        assert_eq!(BiquadElem::from_quad(&x.conj(), &bc).unwrap(), ex.conj_s());
        assert_eq!(BiquadElem::from_quad(&(x * y), &bc).unwrap(), ex * ey);
    }
}
