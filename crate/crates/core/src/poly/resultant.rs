//! Sylvester matrices, determinants, resultants and discriminants.
//!
//! Three determinant routes are kept side by side: fraction-free Bareiss
//! elimination, the subresultant remainder sequence, and the division-free
//! Berkowitz algorithm. The last one works over rings with zero divisors
//! (the biquadratic ring in degenerate contexts), the first two are faster.

use alloc::vec;
use alloc::vec::Vec;

use super::Poly;
use crate::error::{Error, Result};
use crate::ring::Ring;

pub type Matrix<R> = Vec<Vec<R>>;

/// Rows `0..deg q` hold the coefficients of `p`, the remaining rows those of
/// `q`, each in descending degree.
pub fn sylvester<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Matrix<R> {
    let m = p.degree().expect("nonzero polynomial");
    let n = q.degree().expect("nonzero polynomial");
    let size = m + n;
    let zero = p.lc().unwrap().zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in p.coeffs().iter().enumerate() {
            row[i + m - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in q.coeffs().iter().enumerate() {
            row[i + n - k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free Gaussian elimination. `None` when a pivot division is not
/// exact, which only happens over rings with zero divisors.
pub fn det_bareiss<R: Ring>(mut a: Matrix<R>) -> Option<R> {
    let n = a.len();
    if n == 0 {
        return None;
    }
    let zero = a[0][0].zero_like();
    let mut prev = a[0][0].one_like();
    let mut negate = false;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Some(zero);
        };
        if piv != k {
            a.swap(piv, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = zero.clone();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if negate { -d } else { d })
}

/// Coefficients of `det(x I - a)` in descending order, computed with ring
/// operations only.
pub fn charpoly_berkowitz<R: Ring>(a: &Matrix<R>) -> Vec<R> {
    let n = a.len();
    assert!(n > 0, "empty matrix");
    let one = a[0][0].one_like();
    let zero = a[0][0].zero_like();
    let mut v = vec![one.clone(), -a[0][0].clone()];
    for r in 1..n {
        // t_0 = 1, t_1 = -a_rr, t_{k+2} = -R M^k C
        let mut t = Vec::with_capacity(r + 2);
        t.push(one.clone());
        t.push(-a[r][r].clone());
        let mut col: Vec<R> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(zero.clone(), |acc, j| acc + a[r][j].clone() * col[j].clone());
            t.push(-dot);
            col = (0..r).map(|i| (0..r).fold(zero.clone(), |acc, j| acc + a[i][j].clone() * col[j].clone())).collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = zero.clone();
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                acc = acc + t[i - j].clone() * vj.clone();
            }
            next.push(acc);
        }
        v = next;
    }
    v
}

pub fn det_berkowitz<R: Ring>(a: &Matrix<R>) -> R {
    let n = a.len();
    let c = charpoly_berkowitz(a);
    let last = c[n].clone();
    if n % 2 == 0 {
        last
    } else {
        -last
    }
}

fn trivial_resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Option<R> {
    match (p.degree(), q.degree()) {
        (None, _) | (_, None) => {
            let e = p.lc().or(q.lc());
            Some(e.map(|e| e.zero_like()).unwrap_or_else(|| panic!("resultant of two zero polynomials")))
        }
        (Some(0), Some(n)) => Some(p.lc().unwrap().pow(n as u32)),
        (Some(m), Some(0)) => Some(q.lc().unwrap().pow(m as u32)),
        _ => None,
    }
}

pub fn resultant_bareiss<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Option<R> {
    trivial_resultant(p, q).or_else(|| det_bareiss(sylvester(p, q)))
}

pub fn resultant_berkowitz<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> R {
    trivial_resultant(p, q).unwrap_or_else(|| det_berkowitz(&sylvester(p, q)))
}

/// Subresultant remainder sequence; `None` if an exact division fails.
pub fn resultant_subresultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Option<R> {
    if let Some(r) = trivial_resultant(p, q) {
        return Some(r);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        if da % 2 == 1 && db % 2 == 1 {
            negate = true;
        }
        core::mem::swap(&mut a, &mut b);
    }
    let one = a.lc().unwrap().one_like();
    let mut g = one.clone();
    let mut h = one;
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b).ok()?;
        let divisor = g.clone() * h.pow(delta);
        a = b;
        if r.is_zero() {
            return Some(a.lc().unwrap().zero_like());
        }
        let quotients: Option<Vec<R>> = r.coeffs().iter().map(|c| c.exact_div(&divisor)).collect();
        b = Poly::new(quotients?);
        g = a.lc().unwrap().clone();
        h = if delta == 0 { h } else { g.pow(delta).exact_div(&h.pow(delta - 1))? };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            let lb = b.lc().unwrap().clone();
            let res = if da == 0 { h } else { lb.pow(da).exact_div(&h.pow(da - 1))? };
            return Some(if negate { -res } else { res });
        }
    }
}

/// `Res(p, q) = lc(p)^deg q * prod q(root)`; Bareiss with a Berkowitz
/// fallback when a pivot is a zero divisor.
pub fn resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> R {
    resultant_bareiss(p, q).unwrap_or_else(|| resultant_berkowitz(p, q))
}

/// `(-1)^(n(n-1)/2) Res(p, p') / lc(p)`.
pub fn discriminant<R: Ring>(p: &Poly<R>) -> Result<R> {
    let n = p
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidArgument("discriminant needs degree at least 1".into()))?;
    if n == 1 {
        return Ok(p.lc().unwrap().one_like());
    }
    let r = resultant(p, &p.derivative());
    let r = if (n * (n - 1) / 2) % 2 == 1 { -r } else { r };
    r.exact_div(p.lc().unwrap()).ok_or(Error::NotInvertible)
}

/// Characteristic polynomial of multiplication by `g` on `R[y]/(modulus)`,
/// i.e. `prod (x - g(root))` over the roots of the monic `modulus`.
pub fn multiplication_charpoly<R: Ring>(modulus: &Poly<R>, g: &Poly<R>) -> Result<Poly<R>> {
    let n = modulus
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidArgument("modulus must have positive degree".into()))?;
    if !modulus.is_monic() {
        return Err(Error::InvalidArgument("modulus must be monic".into()));
    }
    let like = modulus.lc().unwrap().clone();
    let mut cols = Vec::with_capacity(n);
    let mut cur = g.rem(modulus)?;
    for _ in 0..n {
        cols.push(cur.clone());
        cur = cur.shift(1).rem(modulus)?;
    }
    let mat: Matrix<R> = (0..n).map(|i| (0..n).map(|j| cols[j].coeff_or_zero(i, &like)).collect()).collect();
    let mut c = charpoly_berkowitz(&mat);
    c.reverse();
    Ok(Poly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64(cs)
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])), int(9));
        assert_eq!(resultant(&p(&[1, 2, 1]), &p(&[1, 2, 1])), int(0));
        assert_eq!(resultant(&p(&[3]), &p(&[1, 1, 1])), int(9));
    }

    #[test]
    fn three_routes_agree() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = p(&[2, 6, -5, 3]);
        let r1 = resultant_bareiss(&a, &b).unwrap();
        let r2 = resultant_subresultant(&a, &b).unwrap();
        let r3 = resultant_berkowitz(&a, &b);
        assert_eq!(r1, r3);
        assert_eq!(r2, r3);
        let r4 = resultant_subresultant(&b, &a).unwrap();
        assert_eq!(r4, -r3);
    }

    #[test]
    fn quadratic_discriminant() {
        assert_eq!(discriminant(&p(&[7, 5, 1])).unwrap(), int(25 - 28));
        assert_eq!(discriminant(&p(&[7, 5, 2])).unwrap(), int(25 - 56));
    }

    #[test]
    fn simplest_cubic_discriminant() {
        // t = 1: x^3 - x^2 - 4x - 1
        assert_eq!(discriminant(&p(&[-1, -4, -1, 1])).unwrap(), int(169));
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        let f = p(&[5, -3, 0, 2, 1]);
        let cp = multiplication_charpoly(&f, &p(&[0, 1])).unwrap();
        assert_eq!(cp, f);
    }
}
