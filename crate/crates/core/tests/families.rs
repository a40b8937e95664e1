use murphy_core::exact::{int, rat, Integer, Rational};
use murphy_core::families::{
    family_poly, integer_content, lambda_cycle_check, shen_build, shen_disc_check, shen_parity_holds, shen_q, shen_v,
    v2, verify_m, FamilyKind,
};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn eval_f64(p: &murphy_core::Poly<Rational>, x: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap())
}

fn family() -> impl Strategy<Value = FamilyKind> {
    prop::sample::select(FamilyKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shen_parts_are_real_and_imaginary(n in 1u32..=14, x in -3.0f64..3.0) {
        let z = Complex64::new(x, 1.0).powu(n);
        let scale = 1.0 + z.norm();
        prop_assert!((eval_f64(&shen_q(n), x) - z.re).abs() < 1e-9 * scale);
        prop_assert!((eval_f64(&shen_v(n), x) - z.im).abs() < 1e-9 * scale);
    }

    #[test]
    fn members_satisfy_murphy(kind in family(), tn in -9i64..=9, td in 1i64..=4) {
        let t = rat(tn, td);
        if let Ok(spec) = family_poly(kind, &t) {
            prop_assert!(verify_m(&spec), "{} at {}", kind, t);
        }
    }

    #[test]
    fn sigma_order_equals_degree(kind in family(), tn in -9i64..=9, td in 1i64..=3) {
        let t = rat(tn, td);
        if let Ok(spec) = family_poly(kind, &t) {
            if let Ok(Some(order)) = spec.sigma_order(12) {
                prop_assert_eq!(order, kind.degree());
            }
        }
    }
}

#[test]
fn labels_roundtrip() {
    for kind in FamilyKind::ALL {
        assert_eq!(FamilyKind::parse(kind.label()), Some(kind));
    }
    assert_eq!(FamilyKind::parse("d"), Some(FamilyKind::QuinticD));
    assert_eq!(FamilyKind::parse("z"), None);
}

#[test]
fn shen_content_and_parity() {
    for n in 2..=20u32 {
        assert_eq!(integer_content(&shen_v(n)), Some(Integer::from(1u64 << v2(n))));
        assert!(shen_parity_holds(&shen_build(n).unwrap()), "n = {n}");
    }
}

#[test]
fn shen_p4_is_the_simplest_quartic() {
    let p4 = shen_build(4).unwrap();
    for a in [-3i64, 0, 2, 7] {
        assert_eq!(p4.at(&int(a)), murphy_core::Poly::from_i64(&[1, a, -6, -a, 1]));
    }
}

#[test]
fn shen_discriminants() {
    for n in 2..=8 {
        assert!(shen_disc_check(n).unwrap(), "n = {n}");
    }
}

#[test]
fn lambda_cycles() {
    for (n, a) in [(4u32, 1i64), (6, 3)] {
        let r = lambda_cycle_check(n, &int(a), 128).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}
