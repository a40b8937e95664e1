use murphy_core::exact::{int, Integer};
use murphy_core::murphy::{build_bundle, octic, Params};
use murphy_core::numfield::{
    are_associates, complex_roots, constellation_check, cyclotomic, golden_twins, is_irreducible, is_unit,
    norm_charpoly, regulator, regulator_estimate_check, same_field_check, torsion_order, twins_enumerate, unit_checks,
    EstimateFamily, RegulatorCase, TwinFamily,
};
use murphy_core::poly::resultant::resultant;
use murphy_core::Poly;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn norm_is_the_resultant(m in -6i64..=6, a in -6i64..=6, g in prop::collection::vec(-3i64..=3, 1..=4)) {
        let t = octic(&Params::ints(m, a));
        let g = Poly::from_i64(&g);
        prop_assume!(g.degree().is_some());
        let cp = norm_charpoly(&t, &g).unwrap();
        prop_assert_eq!(cp.degree(), Some(8));
        prop_assert_eq!(cp.coeff_or_zero(0, &int(0)), resultant(&t, &g));
    }

    #[test]
    fn roots_of_t_have_unit_product(m in -9i64..=9, a in -9i64..=9) {
        let t = octic(&Params::ints(m, a));
        prop_assume!(t.is_squarefree().unwrap());
        let roots = complex_roots(&t, 128).unwrap();
        let mut prod = 1.0f64;
        for z in roots.centers() {
            prod *= z.abs().to_f64();
        }
        prop_assert!((prod - 1.0).abs() < 1e-9);
        prop_assert!(is_unit(&t, &Poly::x()).unwrap());
    }

    #[test]
    fn associates_are_symmetric(m in 3i64..=9, a in -9i64..=9, k in 0u32..=3) {
        let t = octic(&Params::ints(m, a));
        let x = Poly::x();
        let g = Poly::from_i64(&[1, 1]);
        let h = &g * &x.pow(k);
        prop_assert!(are_associates(&t, &g, &h).unwrap());
        prop_assert!(are_associates(&t, &h, &g).unwrap());
    }
}

#[test]
fn golden_twins_reverse_into_each_other() {
    for j in 2..=7 {
        let cur = golden_twins(TwinFamily::Sw1, j).unwrap();
        let prev = golden_twins(TwinFamily::Sw1, j - 1).unwrap();
        let rev = Poly::new(prev.psw_bar.coeffs().iter().rev().cloned().collect());
        assert_eq!(cur.psw, rev, "j = {j}");
    }
}

#[test]
fn golden_twins_factor_t() {
    for family in [TwinFamily::Sw1, TwinFamily::Sw2] {
        for j in 1..=6 {
            let tw = golden_twins(family, j).unwrap();
            assert!(tw.invariant_holds(), "{family:?} j = {j}");
            let flagged = family == TwinFamily::Sw1 && j <= 2;
            assert_eq!(tw.degenerate.is_some(), flagged, "{family:?} j = {j}");
        }
    }
}

#[test]
fn norm_plus_one_enumeration() {
    let found = twins_enumerate(&Integer::from(34), 1..=3).unwrap();
    assert!(!found.is_empty());
    for tw in &found {
        assert!(matches!(tw.family, TwinFamily::NormPlusOne { .. }));
        assert!(tw.invariant_holds());
    }
    assert!(twins_enumerate(&Integer::from(3), 1..=2).is_err());
    assert!(twins_enumerate(&Integer::from(20), 1..=2).is_err());
}

#[test]
fn same_field_cases() {
    for (m, a, same) in [(-3, -4, true), (-7, 8, true), (-66, 13, true), (7, -4, false)] {
        let (p, q) = build_bundle(&Params::ints(m, a)).unwrap().twins().unwrap();
        assert_eq!(same_field_check(&p, &q, 128).unwrap().is_same(), same, "({m}, {a})");
        assert!(same_field_check(&p, &p, 128).unwrap().is_same());
    }
}

#[test]
fn cyclotomic_torsion() {
    for (k, w) in [(3u32, 6u32), (5, 10), (7, 14), (8, 8), (12, 12)] {
        assert_eq!(torsion_order(&cyclotomic(k), 256).unwrap(), w, "k = {k}");
        assert!(is_irreducible(&cyclotomic(k), 256).unwrap());
    }
    assert!(!is_irreducible(&Poly::from_i64(&[1, 0, 0, 0, 1]).pow(2), 256).unwrap());
}

#[test]
fn exceptional_units() {
    for (m, a) in [(3, 13), (1, -5), (3, -6)] {
        let r = unit_checks(&Params::ints(m, a)).unwrap();
        assert!(r.identities_hold());
        assert!(r.exceptional_triple, "({m}, {a})");
        assert_eq!(r.t_at_minus_one, int((m - 2) * (m - 2)));
    }
    let c = constellation_check(&int(7), &int(1)).unwrap();
    assert!(c.all_pass() && c.all_units);
}

#[test]
fn regulators_agree_with_closed_forms() {
    for (case, m, a) in [
        (RegulatorCase::ImagM01, 1, 2),
        (RegulatorCase::ImagMgt2, 3, -6),
        (RegulatorCase::TwinReal, 3, 13),
        (RegulatorCase::DihedralReal, 47, -95),
    ] {
        let r = regulator(case, &Params::ints(m, a), 128).unwrap();
        assert!(r.matches, "{case:?}");
        assert!(r.minor_spread.to_f64() < 1e-20);
        assert!(r.closed_form_spread.to_f64() < 1e-20);
        assert_eq!(RegulatorCase::parse(case.label()), Some(case));
    }
    assert!(regulator(RegulatorCase::ImagM01, &Params::ints(3, 13), 128).is_err());
}

#[test]
fn estimates_converge() {
    for family in EstimateFamily::ALL {
        let e = regulator_estimate_check(family, 4..=6, 128).unwrap();
        assert!(e.within_quarter && e.trending, "{family:?}");
    }
}
