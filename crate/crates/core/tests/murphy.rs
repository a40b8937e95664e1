use murphy_core::exact::{int, is_square, rat};
use murphy_core::murphy::{
    build_bundle, mu, murphy_identity_check, octic, sigma_mod_t, verify_core_identities, Params, Regime,
};
use murphy_core::poly::resultant::discriminant;
use murphy_core::poly::Poly;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn generic_params() -> impl Strategy<Value = Params> {
    (-12i64..=12, 1i64..=3, -15i64..=15, 1i64..=3)
        .prop_map(|(mn, md, an, ad)| Params::new(rat(mn, md), rat(an, ad)))
        .prop_filter("generic regime", |p| p.regime() == Regime::Generic)
        .prop_filter("mu nonzero", |p| !num_traits::Zero::is_zero(&mu(p)))
}

/// `p(u, x) p(1/u, x)` in floating point with `u` a root of `u^2 - m u + 1`.
fn octic_oracle(m: f64, a: f64) -> Vec<f64> {
    let s = Complex64::new(m * m - 4.0, 0.0).sqrt();
    let u = (Complex64::new(m, 0.0) + s) / 2.0;
    let quartic = |u: Complex64| {
        let c = |x: f64| Complex64::new(x, 0.0);
        vec![u * u, u * u - c(1.0) - u * a, u * (2.0 - a) - c(a + 4.0), u - u.inv() - c(a), c(1.0)]
    };
    let (p, q) = (quartic(u), quartic(u.inv()));
    let mut out = [Complex64::new(0.0, 0.0); 9];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|z| z.re).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn identities_hold_for_rational_params(p in generic_params()) {
        let report = verify_core_identities(&p);
        prop_assert!(report.all_pass(), "{:?} failed {:?}", p, report.failures());
    }

    #[test]
    fn octic_matches_float_product(m in -15i64..=15, a in -15i64..=15) {
        let t = octic(&Params::ints(m, a));
        let oracle = octic_oracle(m as f64, a as f64);
        prop_assert_eq!(t.degree(), Some(8));
        for (k, c) in t.coeffs().iter().enumerate() {
            let c = c.to_f64().unwrap();
            prop_assert!((c - oracle[k]).abs() <= 1e-7 * (1.0 + c.abs()), "coefficient {} {} vs {}", k, c, oracle[k]);
        }
    }

    #[test]
    fn octic_is_monic_with_constant_one(m in -15i64..=15, a in -15i64..=15) {
        let t = octic(&Params::ints(m, a));
        let cs = t.coeffs();
        prop_assert_eq!(&cs[0], &int(1));
        prop_assert_eq!(&cs[8], &int(1));
    }

    #[test]
    fn square_roots_live_modulo_t(p in generic_params()) {
        let sm = sigma_mod_t(&p).unwrap();
        let r = &sm.ring;
        prop_assert_eq!(r.mul(&sm.s_expr, &sm.s_expr), Poly::constant(p.s2()));
        if let Some(w) = &sm.w_expr {
            prop_assert_eq!(r.mul(w, w), Poly::constant(p.w2()));
        }
    }

    #[test]
    fn quartic_products_recover_t(m in -10i64..=10, a in -10i64..=10) {
        let p = Params::ints(m, a);
        prop_assume!(p.regime() == Regime::Generic);
        let b = build_bundle(&p).unwrap();
        let prod = &b.p * &b.pbar;
        prop_assert_eq!(prod.degree(), Some(8));
        for (k, c) in prod.coeffs().iter().enumerate() {
            prop_assert_eq!(c.as_rational(), Some(b.t.coeff_or_zero(k, &int(0))));
        }
    }
}

#[test]
fn discriminant_of_t_is_a_square() {
    for m in -8i64..=8 {
        for a in -8i64..=8 {
            let t = octic(&Params::ints(m, a));
            let d = discriminant(&t).unwrap();
            assert!(is_square(&d), "disc T({m}, {a}) = {d}");
        }
    }
}

#[test]
fn mu_vanishes_only_at_known_points() {
    let mut zeros = Vec::new();
    for m in -20i64..=20 {
        for a in -20i64..=20 {
            if num_traits::Zero::is_zero(&mu(&Params::ints(m, a))) {
                zeros.push((m, a));
            }
        }
    }
    assert_eq!(zeros, vec![(2, -4)]);
    assert!(num_traits::Zero::is_zero(&mu(&Params::new(rat(2, 3), rat(-4, 3)))));
}

#[test]
fn murphy_condition_on_integer_grid() {
    for m in -9i64..=9 {
        for a in -9i64..=9 {
            let p = Params::ints(m, a);
            match p.regime() {
                Regime::Generic | Regime::MMinusTwo => {}
                _ => continue,
            }
            if p.regime() == Regime::Generic && num_traits::Zero::is_zero(&mu(&p)) {
                continue;
            }
            assert!(murphy_identity_check(&p).unwrap(), "({m}, {a})");
        }
    }
}

#[test]
fn sigma_has_order_four() {
    let sm = sigma_mod_t(&Params::ints(3, 13)).unwrap();
    let orbit = sm.orbit(5);
    assert_ne!(orbit[1], orbit[0]);
    assert_ne!(orbit[2], orbit[0]);
    assert_eq!(orbit[4], orbit[0]);
    assert!(sm.checks().iter().all(|c| c.pass));
}
