//! Coefficient ring abstraction shared by every polynomial in the crate.

use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::Rational;

/// A commutative ring that is a `Q`-algebra.
///
/// Elements of context-dependent rings (quadratic and biquadratic rings)
/// carry their context, so constants are built from an existing element.
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn rational_like(&self, q: &Rational) -> Self;

    /// `self / d` when the quotient exists and is unique.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * self.rational_like(q)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Rings whose constants need no context.
pub trait ContextFree: Ring {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self {
        Self::one().rational_like(q)
    }
}

/// Rings where every nonzero element is expected to be invertible.
///
/// `inv` still returns `None` on zero divisors, which occur in the
/// degenerate contexts of the quadratic rings.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Zero::zero()
    }
    fn one_like(&self) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}

impl ContextFree for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
