//! The octic `T(m, A, x)`, its quadratic and quartic factors over the
//! biquadratic ring, the map `sigma` as a rational expression modulo `T`,
//! and exact checks of the identities relating them.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{DegenerateCase, Error, Result};
use crate::exact::{int, is_square, rat, zero, Rational};
use crate::poly::resultant::resultant;
use crate::poly::{MobiusMap, Poly, QuotientRing};
use crate::quadring::{
    components, rational_poly, rational_poly_quad, test_value, BiquadCtx, BiquadElem, QuadCtx, QuadElem,
};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub m: Rational,
    pub a: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    MTwo,
    MMinusTwo,
    /// `m^2 - 4` is a nonzero rational square.
    SquareDiscriminant,
    Generic,
}

impl Params {
    pub fn new(m: Rational, a: Rational) -> Self {
        Params { m, a }
    }

    pub fn ints(m: i64, a: i64) -> Self {
        Params::new(int(m), int(a))
    }

    pub fn s2(&self) -> Rational {
        &self.m * &self.m - int(4)
    }

    pub fn w2(&self) -> Rational {
        let t = &self.m + int(2) + &self.a;
        &t * &t - int(4) * (&self.m - int(2))
    }

    pub fn y2(&self) -> Rational {
        &self.a * &self.a - int(4) * (&self.m - int(2))
    }

    pub fn regime(&self) -> Regime {
        if self.m == int(2) {
            Regime::MTwo
        } else if self.m == int(-2) {
            Regime::MMinusTwo
        } else if is_square(&self.s2()) {
            Regime::SquareDiscriminant
        } else {
            Regime::Generic
        }
    }

    /// `(m, -m - 2 - A)`: swaps `w^2` and `y^2`.
    pub fn related(&self) -> Params {
        Params::new(self.m.clone(), -&self.m - int(2) - &self.a)
    }

    fn regime_error(&self) -> Option<Error> {
        match self.regime() {
            Regime::MTwo => Some(Error::Degenerate(DegenerateCase::MEqualsTwo)),
            Regime::MMinusTwo => Some(Error::Degenerate(DegenerateCase::MEqualsMinusTwo)),
            Regime::SquareDiscriminant => Some(Error::Degenerate(DegenerateCase::SquareDiscriminant)),
            Regime::Generic => None,
        }
    }
}

pub fn related_octic(p: &Params) -> Params {
    p.related()
}

/// `p(x) = x^4 + (u - 1/u - A) x^3 + ((2 - A) u - A - 4) x^2 + (u^2 - 1 - A u) x + u^2`
/// over `Q(u)`; when `m = +-2` the double root `u = m/2` is substituted.
pub fn build_p(params: &Params) -> Poly<QuadElem> {
    let ctx = QuadCtx::murphy(&params.m);
    let u = if params.m == int(2) || params.m == int(-2) {
        QuadElem::rational(&params.m * rat(1, 2), &ctx)
    } else {
        QuadElem::gen(&ctx)
    };
    p_in_terms_of(&u, &params.a)
}

fn p_in_terms_of(u: &QuadElem, a: &Rational) -> Poly<QuadElem> {
    let one = u.one_like();
    let c = |q: Rational| u.rational_like(&q);
    let uinv = u.conj();
    let u2 = u.clone() * u.clone();
    Poly::new(vec![
        u2.clone(),
        u2 - one.clone() - u.scale(a),
        u.scale(&(int(2) - a)) - c(a + int(4)),
        u.clone() - uinv - c(a.clone()),
        one,
    ])
}

/// `T(m, A, x) = p(x) pbar(x)`, monic with rational coefficients.
pub fn octic(params: &Params) -> Poly<Rational> {
    let p = build_p(params);
    let pbar = p.map(QuadElem::conj);
    rational_poly_quad(&(&p * &pbar)).expect("p pbar has rational coefficients")
}

#[derive(Clone, Debug)]
pub struct OcticBundle {
    pub params: Params,
    pub t: Poly<Rational>,
    pub p: Poly<QuadElem>,
    pub pbar: Poly<QuadElem>,
    pub ctx: Arc<BiquadCtx>,
    /// `q[0..4]` are `q1..q4`.
    pub q: [Poly<BiquadElem>; 4],
    pub ps: Poly<BiquadElem>,
    pub ps_bar: Poly<BiquadElem>,
    pub psw: Poly<BiquadElem>,
    pub psw_bar: Poly<BiquadElem>,
    pub pw: Poly<BiquadElem>,
    pub pw_bar: Poly<BiquadElem>,
    pub s2: Rational,
    pub w2: Rational,
    pub y2: Rational,
    pub mu: Rational,
    pub related_a: Rational,
}

/// `q1..q4` over `Q[s, w]`.
pub fn quadratic_factors(params: &Params, ctx: &Arc<BiquadCtx>) -> [Poly<BiquadElem>; 4] {
    let (m, a) = (&params.m, &params.a);
    let half = rat(1, 2);
    let q = |sign_s: i64, sign_w: i64| {
        let lin = BiquadElem::new([-a * &half, int(sign_s) * &half, int(sign_w) * &half, zero()], ctx);
        let cst = BiquadElem::new([m * &half, int(sign_s) * &half, zero(), zero()], ctx);
        Poly::new(vec![cst, lin, BiquadElem::rational(int(1), ctx)])
    };
    [q(1, -1), q(1, 1), q(-1, 1), q(-1, -1)]
}

/// `Res(q1, q3) Res(q2, q4)`.
pub fn mu(params: &Params) -> Rational {
    let ctx = BiquadCtx::murphy(&params.m, &params.a);
    let q = quadratic_factors(params, &ctx);
    monster(&q)
}

fn monster(q: &[Poly<BiquadElem>; 4]) -> Rational {
    let r = resultant(&q[0], &q[2]) * resultant(&q[1], &q[3]);
    r.as_rational().expect("monster resultant is rational")
}

pub fn mu_case(params: &Params) -> DegenerateCase {
    if *params == Params::ints(2, -4) {
        DegenerateCase::MuZeroAtTwoMinusFour
    } else if *params == Params::new(rat(2, 3), rat(-4, 3)) {
        DegenerateCase::MuZeroAtTwoThirds
    } else {
        DegenerateCase::MuZero { m: Box::new(params.m.clone()), a: Box::new(params.a.clone()) }
    }
}

pub fn build_bundle(params: &Params) -> Result<OcticBundle> {
    let p = build_p(params);
    let pbar = p.map(QuadElem::conj);
    let t = rational_poly_quad(&(&p * &pbar)).ok_or_else(|| Error::Internal("T is not rational".into()))?;
    let ctx = BiquadCtx::murphy(&params.m, &params.a);
    let q = quadratic_factors(params, &ctx);
    let ps = &q[0] * &q[1];
    let ps_bar = &q[2] * &q[3];
    let psw = &q[0] * &q[2];
    let psw_bar = &q[1] * &q[3];
    let pw = &q[0] * &q[3];
    let pw_bar = &q[1] * &q[2];
    for (prod, name) in [(&ps * &ps_bar, "Ps"), (&psw * &psw_bar, "Psw"), (&pw * &pw_bar, "Pw")] {
        if rational_poly(&prod).as_ref() != Some(&t) {
            return Err(Error::Internal(alloc::format!("{name} times its conjugate differs from T")));
        }
    }
    if !t.is_monic() || t.coeff(0) != Some(&int(1)) || t.degree() != Some(8) {
        return Err(Error::Internal("T is not a monic octic with constant term 1".into()));
    }
    let mu = monster(&q);
    Ok(OcticBundle {
        params: params.clone(),
        t,
        p,
        pbar,
        ctx,
        q,
        ps,
        ps_bar,
        psw,
        psw_bar,
        pw,
        pw_bar,
        s2: params.s2(),
        w2: params.w2(),
        y2: params.y2(),
        mu,
        related_a: params.related().a,
    })
}

impl OcticBundle {
    pub fn s(&self) -> BiquadElem {
        BiquadElem::s(&self.ctx)
    }

    pub fn w(&self) -> BiquadElem {
        BiquadElem::w(&self.ctx)
    }

    /// `u = (m + s)/2`.
    pub fn u(&self) -> BiquadElem {
        (self.s() + BiquadElem::rational(self.params.m.clone(), &self.ctx)).scale(&rat(1, 2))
    }

    fn c(&self, q: Rational) -> BiquadElem {
        BiquadElem::rational(q, &self.ctx)
    }

    /// `(A, B)` with `Ps = A s + B`.
    pub fn s_parts(&self) -> (Poly<Rational>, Poly<Rational>) {
        let [b, a, _, _] = components(&self.ps);
        (a, b)
    }

    /// `(C, D)` with `Pw = C w + D`.
    pub fn w_parts(&self) -> (Poly<Rational>, Poly<Rational>) {
        let [d, _, c, _] = components(&self.pw);
        (c, d)
    }

    /// `Psw` and its conjugate with rational coefficients, when `s w` is rational.
    pub fn twins(&self) -> Option<(Poly<Rational>, Poly<Rational>)> {
        let sw = crate::exact::perfect_square(&(&self.s2 * &self.w2))?;
        let spec = |p: &Poly<BiquadElem>| -> Option<Poly<Rational>> {
            let cs: Option<Vec<Rational>> = p.coeffs().iter().map(|c| c.split_sw().map(|(a, b)| a + b * &sw)).collect();
            cs.map(Poly::new)
        };
        Some((spec(&self.psw)?, spec(&self.psw_bar)?))
    }

    /// `Pw` and its conjugate with rational coefficients, when `w` is rational.
    pub fn dihedral_pair(&self) -> Option<(Poly<Rational>, Poly<Rational>)> {
        let w = crate::exact::perfect_square(&self.w2)?;
        let spec = |p: &Poly<BiquadElem>| -> Option<Poly<Rational>> {
            let cs: Option<Vec<Rational>> = p.coeffs().iter().map(|c| c.split_w().map(|(a, b)| a + b * &w)).collect();
            cs.map(Poly::new)
        };
        Some((spec(&self.pw)?, spec(&self.pw_bar)?))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub params: Params,
    pub results: Vec<IdentityResult>,
    /// Set when the parameters are outside the generic regime.
    pub skipped: Option<String>,
    pub mu_zero: bool,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.skipped.is_none() && self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.results.iter().filter(|r| !r.pass).map(|r| r.name).collect()
    }
}

fn disc2(q: &Poly<BiquadElem>) -> BiquadElem {
    let b = q.coeffs()[1].clone();
    let c = q.coeffs()[0].clone();
    b.clone() * b - c.scale(&int(4))
}

/// Checks every exact identity of the generic regime at one parameter pair.
pub fn verify_core_identities(params: &Params) -> IdentityReport {
    let mut report = IdentityReport { params: params.clone(), results: Vec::new(), skipped: None, mu_zero: false };
    if let Some(e) = params.regime_error() {
        report.skipped = Some(alloc::format!("{e}"));
        return report;
    }
    let b = match build_bundle(params) {
        Ok(b) => b,
        Err(e) => {
            report.skipped = Some(alloc::format!("{e}"));
            return report;
        }
    };
    report.mu_zero = b.mu.is_zero();
    let mut add = |name: &'static str, pass: bool| report.results.push(IdentityResult { name, pass });
    let (m, a) = (&params.m, &params.a);

    // Over Q(u).
    let qctx = b.p.lc().unwrap().ctx().clone();
    let u = QuadElem::gen(&qctx);
    let uq = |q: Rational| QuadElem::rational(q, &qctx);
    let sigma = MobiusMap { a: uq(int(-1)), b: uq(int(-1)), c: uq(int(1)), d: u.clone() };
    add("opensesame", sigma.transform(&b.pbar) == b.p.scale(&uq(m - int(2))));
    add("T=p*pbar monic, constant 1", b.t.is_monic() && b.t.coeff(0) == Some(&int(1)));
    let recip = MobiusMap { a: uq(zero()), b: u.clone(), c: uq(int(1)), d: uq(zero()) };
    add("genrecip1", recip.transform(&b.p) == b.p.scale(&(u.clone() * u.clone())));
    // x^2 F(x + u/x) with F(Y) = Y^2 + (-A + u - 1/u) Y - A - 4 - A u
    let f1 = u.clone() - u.conj() - uq(a.clone());
    let f0 = uq(-a - int(4)) - u.scale(a);
    let x2u = Poly::new(vec![u.clone(), uq(zero()), uq(int(1))]);
    let x = Poly::x_like(&u);
    let lhs = &(&x2u * &x2u) + &(&(&x2u * &x).scale(&f1) + &Poly::monomial(f0.clone(), 2));
    add("genrecip2(a)", lhs == b.p);
    let disc_f = f1.clone() * f1 - f0.scale(&int(4));
    add("genrecip2(b)", disc_f.as_rational() == Some(b.w2.clone()));
    let disc_p = b.p.discriminant();
    let disc_pbar = b.pbar.discriminant();
    add("disc(p)=u^6 disc(pbar)", matches!((&disc_p, &disc_pbar), (Ok(dp), Ok(dq)) if *dp == u.pow(6) * dq.clone()));

    // Over Q(s, w).
    let uu = b.u();
    let one = b.c(int(1));
    let emb = |p: &Poly<QuadElem>| p.map(|c| BiquadElem::from_quad(c, &b.ctx).expect("same m"));
    add("q1 q2 = p", b.ps == emb(&b.p));
    add("q3 q4 = pbar", b.ps_bar == emb(&b.pbar));
    add("Ps in Q(s)[x]", b.ps.coeffs().iter().all(|c| c.split_s().is_some()));
    add("Psw in Q(sw)[x]", b.psw.coeffs().iter().all(|c| c.split_sw().is_some()));
    add("Pw in Q(w)[x]", b.pw.coeffs().iter().all(|c| c.split_w().is_some()));
    let neg1 = b.c(int(-1));
    let qv: Vec<BiquadElem> = b.q.iter().map(|q| q.eval(&neg1)).collect();
    let d: Vec<BiquadElem> = b.q.iter().map(disc2).collect();
    let two_u1 = (uu.clone() + one.clone()).scale(&int(2));
    add("genrecip2(d)(i)", d[0] == qv[0].clone() * (qv[0].clone() + qv[1].clone() * uu.clone() - two_u1.clone()));
    add("genrecip2(d)(ii)", d[1] == qv[1].clone() * (qv[1].clone() + qv[0].clone() * uu.clone() - two_u1));
    let bsig = MobiusMap { a: neg1.clone(), b: neg1.clone(), c: one.clone(), d: uu.clone() };
    add("identqs(a)", bsig.transform(&b.q[2]) == b.q[0].scale(&qv[2]));
    let um1 = uu.clone() - one.clone();
    let root = (um1.clone() * d[2].clone()).clone();
    add("identqs(b)", d[0].clone() * d[2].clone() * qv[2].clone() * qv[2].clone() == root.clone() * root.clone());
    let k = BiquadElem::new([zero(), (m + a - int(2)) * rat(1, 2), (int(2) - m) * rat(1, 2), zero()], &b.ctx);
    add("identqs(c)", root == qv[2].clone() * k);
    let y2 = b.c(b.y2.clone());
    add("dp12", d[0].clone() * d[1].clone() == y2.clone() * um1.clone() * um1.clone());
    add("res12", resultant(&b.q[0], &b.q[1]) == b.c(b.w2.clone()) * uu.clone());
    let q1 = BiquadElem::new([(m + int(2) + a) * rat(1, 2), zero(), rat(1, 2), zero()], &b.ctx);
    add("Q1=q1(-1)", qv[0] == q1);
    add("dp14", d[0].clone() * d[3].clone() == y2 * q1.clone() * q1.clone());
    add("res14", resultant(&b.q[0], &b.q[3]) == b.c(b.s2.clone()) * q1);
    let (ca, _) = b.s_parts();
    let (cc, _) = b.w_parts();
    let mu2 = &b.mu * &b.mu * rat(1, 256);
    add("monsters", resultant(&ca, &b.t) == (m - int(2)) * (m - int(2)) * &mu2);
    add("monsterw", resultant(&cc, &b.t) == mu2);
    let tv = test_value(m, a, &b.ctx);
    let qu = Poly::new(vec![one.clone(), one.clone() + uu.clone(), one.clone()]);
    add("tv = det(q1, q_u, q3)", coefficient_det(&[&b.q[0], &qu, &b.q[2]]) == tv);
    add("tv tv' = (2-m) Res(q1,q3)", tv.clone() * tv.conj_sw() == resultant(&b.q[0], &b.q[2]).scale(&(int(2) - m)));
    let disc_t = b.t.discriminant().ok();
    add("disc(T) is a square", disc_t.as_ref().is_some_and(is_square));
    if !b.mu.is_zero() {
        if let Ok(sm) = sigma_mod_t(params) {
            let ring = &sm.ring;
            let ok_s = ring.mul(&sm.s_expr, &sm.s_expr) == Poly::constant(b.s2.clone());
            let ok_w = sm.w_expr.as_ref().is_some_and(|w| ring.mul(w, w) == ring.reduce(&Poly::constant(b.w2.clone())));
            add("s mod T squares to s^2", ok_s);
            add("w mod T squares to w^2", ok_w);
        } else {
            add("sigma mod T defined", false);
        }
    }
    report
}

/// Determinant of the 3x3 matrix of coefficients of `x^2, x, 1`.
fn coefficient_det<R: Ring>(rows: &[&Poly<R>; 3]) -> R {
    let like = rows[0].lc().unwrap();
    let m: Vec<Vec<R>> = rows.iter().map(|p| (0..3).rev().map(|k| p.coeff_or_zero(k, like)).collect()).collect();
    let t = |i: usize, j: usize, k: usize| m[0][i].clone() * m[1][j].clone() * m[2][k].clone();
    t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2)
}

/// `sigma(x) = (-x - 1)/(x + u)` as an endomorphism of `Q[x]/(modulus)`,
/// where `u` is itself an element of the quotient.
#[derive(Clone, Debug)]
pub struct SigmaMap {
    pub ring: QuotientRing<Rational>,
    pub u_expr: Poly<Rational>,
    pub s_expr: Poly<Rational>,
    pub w_expr: Option<Poly<Rational>>,
    /// Entries of `(-x - 1)/(x + u)` as elements of the quotient.
    pub mobius: MobiusMap<Poly<Rational>>,
    /// `sigma(x)` reduced.
    pub sigma: Poly<Rational>,
}

impl SigmaMap {
    pub fn modulus(&self) -> &Poly<Rational> {
        self.ring.modulus()
    }

    /// `f -> f(sigma(x))`.
    pub fn apply(&self, f: &Poly<Rational>) -> Poly<Rational> {
        self.ring.compose(f, &self.sigma)
    }

    /// `sigma^k(f)`.
    pub fn apply_k(&self, f: &Poly<Rational>, k: usize) -> Poly<Rational> {
        (0..k).fold(self.ring.reduce(f), |acc, _| self.apply(&acc))
    }

    /// `sigma^k(x)` for `k = 0..n`.
    pub fn orbit(&self, n: usize) -> Vec<Poly<Rational>> {
        let mut out = Vec::with_capacity(n);
        let mut cur = self.ring.reduce(&Poly::x());
        for _ in 0..n {
            out.push(cur.clone());
            cur = self.apply(&cur);
        }
        out
    }

    /// `1 + r + r sigma(r) + ... + r sigma(r) ... sigma^(n-2)(r)` modulo the modulus.
    pub fn murphy_sum(&self, n: usize) -> Poly<Rational> {
        let orbit = self.orbit(n.saturating_sub(1));
        let mut sum = Poly::one();
        let mut prod = Poly::one();
        for o in orbit {
            prod = self.ring.mul(&prod, &o);
            sum = &sum + &prod;
        }
        self.ring.reduce(&sum)
    }

    pub fn checks(&self) -> Vec<IdentityResult> {
        let r = &self.ring;
        let x = r.reduce(&Poly::x());
        let orb = self.orbit(5);
        let one = Poly::one();
        let u = &self.u_expr;
        let trace = r.inv(u).ok().map(|ui| u + &ui);
        let mut out = Vec::new();
        let mut add = |name: &'static str, pass: bool| out.push(IdentityResult { name, pass });
        add("u + 1/u is rational", trace.is_some_and(|t| t.degree().map_or(true, |d| d == 0)));
        add("modulus(sigma) = 0", r.is_zero(&r.compose(self.modulus(), &self.sigma)));
        add("sigma(u) = 1/u", r.mul(&self.apply(u), u) == one);
        add("sigma^2(x) = u/x", r.mul(&orb[2], &x) == *u);
        add("sigma^4(x) = x", orb[4] == x);
        let prod = (0..4).fold(one.clone(), |acc, k| r.mul(&acc, &orb[k]));
        add("x sigma sigma^2 sigma^3 = 1", prod == one);
        add("M4", self.murphy_sum(4).is_zero());
        out
    }
}

/// Builds `sigma` modulo `modulus` from an element `u` of the quotient.
pub fn sigma_from_u(modulus: &Poly<Rational>, u_expr: &Poly<Rational>) -> Result<SigmaMap> {
    let ring = QuotientRing::new(modulus.clone())?;
    let u = ring.reduce(u_expr);
    let den = &Poly::x() + &u;
    let num = Poly::from_i64(&[-1, -1]);
    let sigma = ring.div(&num, &den)?;
    let mobius = MobiusMap { a: Poly::from_i64(&[-1]), b: Poly::from_i64(&[-1]), c: Poly::one(), d: u.clone() };
    Ok(SigmaMap { ring, u_expr: u, s_expr: Poly::zero(), w_expr: None, mobius, sigma })
}

/// `s = -B/A`, `u = (m + s)/2` and `sigma` modulo `T`.
pub fn sigma_mod_t(params: &Params) -> Result<SigmaMap> {
    if let Some(e) = params.regime_error() {
        return Err(e);
    }
    let b = build_bundle(params)?;
    if b.mu.is_zero() {
        return Err(Error::Degenerate(mu_case(params)));
    }
    let ring = QuotientRing::new(b.t.clone())?;
    let (ca, cb) = b.s_parts();
    let s_expr = ring.div(&-&cb, &ca).map_err(|_| Error::Degenerate(mu_case(params)))?;
    let u_expr = (&s_expr + &Poly::constant(params.m.clone())).scale_rational(&rat(1, 2));
    let (cc, cd) = b.w_parts();
    let w_expr = ring.div(&-&cd, &cc).ok();
    let mut sm = sigma_from_u(&b.t, &u_expr)?;
    sm.s_expr = s_expr;
    sm.w_expr = w_expr;
    Ok(sm)
}

/// `(M4)` modulo `T` for generic parameters, modulo `p` itself for `m = -2`.
pub fn murphy_identity_check(params: &Params) -> Result<bool> {
    match params.regime() {
        Regime::MMinusTwo => {
            let p = rational_poly_quad(&build_p(params)).expect("rational at m=-2");
            let sm = sigma_from_u(&p, &Poly::from_i64(&[-1]))?;
            Ok(sm.murphy_sum(4).is_zero())
        }
        _ => Ok(sigma_mod_t(params)?.murphy_sum(4).is_zero()),
    }
}

/// Washington's quartic `P_t` from the `w = 0` case.
pub fn washington_pt(t: &Rational) -> Poly<Rational> {
    let t2 = t * t;
    let t3 = &t2 * t;
    Poly::new(vec![
        int(1),
        &t3 + &t2 + int(2) * t + int(4),
        &t3 + int(3) * &t2 + int(4) * t + int(6),
        &t2 + int(2) * t + int(4),
        int(1),
    ])
}

/// `(m, A) = (t^2 + 2, -t^2 - 2t - 4)`, where `T = P_t^2`.
pub fn washington_params(t: &Rational) -> Params {
    Params::new(t * t + int(2), -(t * t) - int(2) * t - int(4))
}

/// `u mod P_t`: `(-x^3 - (t^2+2t+3) x^2 - (t^3+2t^2+3t+3) x - 1)/t`.
pub fn washington_u(t: &Rational) -> Result<Poly<Rational>> {
    if t.is_zero() {
        return Err(Error::InvalidArgument("t must be nonzero".into()));
    }
    let t2 = t * t;
    let t3 = &t2 * t;
    let num =
        Poly::new(vec![int(-1), -(&t3 + int(2) * &t2 + int(3) * t + int(3)), -(&t2 + int(2) * t + int(3)), int(-1)]);
    Ok(num.scale_rational(&(int(1) / t)))
}

/// A quadratic unit `v` of norm `-1` with `v^2 - t v - 1 = 0`, embedded in
/// the cyclic quartic `P_t`, satisfies `(M4)` under `sigma`.
pub fn normneg1_check(t: &Rational) -> Result<bool> {
    let pt = washington_pt(t);
    let u = washington_u(t)?;
    let sm = sigma_from_u(&pt, &u)?;
    let r = &sm.ring;
    let v = (&u - &Poly::one()).scale_rational(&(int(1) / t));
    let rel = &(&r.mul(&v, &v) - &v.scale_rational(t)) - &Poly::one();
    if !r.is_zero(&rel) {
        return Ok(false);
    }
    let v1 = sm.apply(&v);
    let v2 = sm.apply(&v1);
    let sum = &(&(&Poly::one() + &v) + &r.mul(&v, &v1)) + &r.mul(&r.mul(&v, &v1), &v2);
    Ok(r.is_zero(&sum))
}
