//! Integers, rationals, square tests, quadratic units and Lucas sequences.

use alloc::format;
use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Trial division stops here; larger cofactors are only probably squarefree.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Continued fraction expansions longer than this are abandoned.
pub const CF_STEP_CAP: usize = 1_000_000;

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_integer(n: &Integer) -> Rational {
    Rational::from_integer(n.clone())
}

/// Parses `p/q`, `-p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let parse = |x: &str| {
        let x = x.strip_prefix('+').unwrap_or(x);
        if x.is_empty() || !x.trim_start_matches('-').bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not a rational literal: {s:?}")));
        }
        BigInt::from_str(x).map_err(|_| Error::Parse(format!("not a rational literal: {s:?}")))
    };
    let n = parse(num)?;
    let d = parse(den)?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Exact integer square root when `n` is a perfect square.
pub fn integer_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Nonnegative rational square root, if there is one.
pub fn perfect_square(q: &Rational) -> Option<Rational> {
    let n = integer_sqrt(q.numer())?;
    let d = integer_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_square(q: &Rational) -> bool {
    perfect_square(q).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Squarefree {
    Yes,
    No,
    /// No square factor below the trial division limit, cofactor unresolved.
    Probable,
}

pub fn squarefree_check(n: &Integer) -> Squarefree {
    let mut rest = n.abs();
    if rest.is_zero() {
        return Squarefree::No;
    }
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            return Squarefree::Yes;
        }
        if rest.is_multiple_of(&bp) {
            rest /= &bp;
            if rest.is_multiple_of(&bp) {
                return Squarefree::No;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if integer_sqrt(&rest).is_some() {
        Squarefree::No
    } else {
        Squarefree::Probable
    }
}

/// The squarefree integer `d` and rational `c` with `q = d c^2`, for integral
/// `q` whose square part is found by trial division.
pub fn square_class(q: &Rational) -> Option<(Integer, Rational)> {
    if q.is_zero() {
        return None;
    }
    // q = n/d = n d / d^2
    let mut core = q.numer() * q.denom();
    let mut root = Rational::new(BigInt::one(), q.denom().clone());
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        let p2 = &bp * &bp;
        if p2 > core.abs() {
            break;
        }
        while core.is_multiple_of(&p2) {
            core /= &p2;
            root *= Rational::from_integer(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(r) = integer_sqrt(&core.abs()) {
        if r > BigInt::one() {
            let sign = if core.is_negative() { -1 } else { 1 };
            core = BigInt::from(sign);
            root *= Rational::from_integer(r);
        }
    }
    Some((core, root))
}

/// The unit `(x + y sqrt d)/2` of a real quadratic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadUnit {
    pub d: Integer,
    pub x: Integer,
    pub y: Integer,
    pub norm: i8,
}

impl QuadUnit {
    pub fn one(d: &Integer) -> Self {
        QuadUnit { d: d.clone(), x: BigInt::from(2), y: BigInt::zero(), norm: 1 }
    }

    pub fn mul(&self, o: &QuadUnit) -> QuadUnit {
        let x = (&self.x * &o.x + &self.d * &self.y * &o.y) / 2;
        let y = (&self.x * &o.y + &o.x * &self.y) / 2;
        QuadUnit { d: self.d.clone(), x, y, norm: self.norm * o.norm }
    }

    pub fn conj(&self) -> QuadUnit {
        QuadUnit { d: self.d.clone(), x: self.x.clone(), y: -&self.y, norm: self.norm }
    }

    pub fn inverse(&self) -> QuadUnit {
        let c = self.conj();
        if self.norm == 1 {
            c
        } else {
            QuadUnit { d: c.d, x: -c.x, y: -c.y, norm: c.norm }
        }
    }

    pub fn pow(&self, n: i64) -> QuadUnit {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = QuadUnit::one(&self.d);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// Trace `x`, i.e. `eps + eps'`.
    pub fn trace(&self) -> Integer {
        self.x.clone()
    }

    pub fn check(&self) -> bool {
        let lhs = &self.x * &self.x - &self.d * &self.y * &self.y;
        lhs == BigInt::from(4 * self.norm as i64)
    }

    /// `(x + y s / n) / 2`, where `s` is a square root of `d n^2`.
    pub fn scaled_coefficients(&self, n: &Rational) -> (Rational, Rational) {
        let half = rat(1, 2);
        (from_integer(&self.x) * &half, from_integer(&self.y) * half / n)
    }
}

fn check_radicand(d: &Integer) -> Result<()> {
    if *d <= BigInt::one() {
        return Err(Error::InvalidArgument(format!("d={d} must exceed 1")));
    }
    if squarefree_check(d) == Squarefree::No {
        return Err(Error::NotSquarefree(d.clone()));
    }
    Ok(())
}

/// Fundamental unit of the maximal order of `Q(sqrt d)`.
///
/// Walks the continued fraction of `(1 + sqrt d)/2` or `sqrt d` and stops at
/// the first convergent of norm `+-1`.
pub fn fundamental_unit(d: &Integer) -> Result<QuadUnit> {
    check_radicand(d)?;
    let one_mod_four = d.mod_floor(&BigInt::from(4)) == BigInt::one();
    let root = d.sqrt();
    let (mut pp, mut qq) =
        if one_mod_four { (BigInt::one(), BigInt::from(2)) } else { (BigInt::zero(), BigInt::one()) };
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    for _ in 0..CF_STEP_CAP {
        if !qq.is_positive() {
            return Err(Error::Internal("continued fraction left reduced form".to_string()));
        }
        let a = (&pp + &root).div_floor(&qq);
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        h0 = core::mem::replace(&mut h1, h);
        k0 = core::mem::replace(&mut k1, k);
        let (x, y) = if one_mod_four {
            (BigInt::from(2) * &h1 - &k1, k1.clone())
        } else {
            (BigInt::from(2) * &h1, BigInt::from(2) * &k1)
        };
        let nrm = &x * &x - d * &y * &y;
        if nrm == BigInt::from(4) || nrm == BigInt::from(-4) {
            let norm = if nrm.is_positive() { 1 } else { -1 };
            return Ok(QuadUnit { d: d.clone(), x, y, norm });
        }
        pp = &a * &qq - &pp;
        qq = (d - &pp * &pp) / &qq;
    }
    Err(Error::IterationCap(CF_STEP_CAP))
}

/// `eps^n = (L_n + F_n (eps - eps'))/2` for the fundamental unit `eps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasFib {
    pub d: Integer,
    pub n: i64,
    pub l: Integer,
    pub f: Integer,
}

pub fn lucas_fib(d: &Integer, n: i64) -> Result<LucasFib> {
    let eps = fundamental_unit(d)?;
    Ok(lucas_fib_of(&eps, n))
}

pub fn lucas_fib_of(eps: &QuadUnit, n: i64) -> LucasFib {
    let e = eps.pow(n);
    LucasFib { d: eps.d.clone(), n, l: e.x, f: e.y / &eps.y }
}

pub fn sign_of(q: &Rational) -> Sign {
    if q.is_zero() {
        Sign::NoSign
    } else if q.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}
