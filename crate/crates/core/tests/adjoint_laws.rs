use num_bigint::BigInt;
use proptest::prelude::*;
use tambara_core::adjoint::{
    check_unit, green_homs, tabulate_adjoint, tambara_homs, verify_adjunction, verify_naturality, AdjointElement,
    RightAdjoint,
};
use tambara_core::finite::{
    burnside_mod, burnside_mod_green, fixed_point_functor, FiniteGreenFunctor, FiniteRing, FiniteTambaraFunctor,
};
use tambara_core::{check_tambara_axioms, Burnside, BurnsideElement, CheckMode, GreenFunctor, TambaraFunctor};

fn z2_fixed() -> FiniteTambaraFunctor {
    fixed_point_functor(&FiniteRing::integers_mod(2), &[0, 1]).unwrap()
}

fn z2_squared_swap() -> FiniteTambaraFunctor {
    let z2 = FiniteRing::integers_mod(2);
    fixed_point_functor(&FiniteRing::product(&z2, &z2), &[0, 2, 1, 3]).unwrap()
}

fn green_fixtures() -> Vec<(&'static str, FiniteGreenFunctor)> {
    vec![
        ("A/2", burnside_mod_green(2).unwrap()),
        ("A/3", burnside_mod_green(3).unwrap()),
        ("fp(Z/2)", z2_fixed().green().clone()),
        ("fp(Z/2×Z/2)", z2_squared_swap().green().clone()),
    ]
}

fn tambara_fixtures() -> Vec<(&'static str, FiniteTambaraFunctor)> {
    vec![
        ("A/3", burnside_mod(3).unwrap()),
        ("fp(Z/2)", z2_fixed()),
        ("fp(Z/2×Z/2)", z2_squared_swap()),
        ("F(A/2)", tabulate_adjoint(&burnside_mod_green(2).unwrap()).table),
    ]
}

#[test]
fn operations_preserve_membership() {
    for (name, r) in green_fixtures() {
        let f = RightAdjoint::new(&r).with_membership_checks(false);
        let fixed = f.fixed_elements().unwrap();
        let under = f.under_elements().unwrap();
        for a in &fixed {
            assert!(f.is_fixed_member(a), "{name}");
            assert!(f.is_under_member(&f.res(a)), "{name}: res");
            assert!(f.is_fixed_member(&f.fixed_neg(a)), "{name}: neg");
            for b in &fixed {
                assert!(f.is_fixed_member(&f.fixed_add(a, b)), "{name}: fixed add");
                assert!(f.is_fixed_member(&f.fixed_mul(a, b)), "{name}: fixed mul");
            }
        }
        for u in &under {
            assert!(f.is_under_member(u), "{name}");
            assert!(f.is_under_member(&f.conj(u)), "{name}: conj");
            assert!(f.is_under_member(&f.under_neg(u)), "{name}: neg");
            assert!(f.is_fixed_member(&f.tr(u)), "{name}: tr");
            assert!(f.is_fixed_member(&f.norm(u)), "{name}: norm");
            for v in &under {
                assert!(f.is_under_member(&f.under_add(u, v)), "{name}: underlying add");
                assert!(f.is_under_member(&f.under_mul(u, v)), "{name}: underlying mul");
            }
        }
    }
}

#[test]
fn adjoint_of_each_fixture_is_tambara() {
    for (name, r) in green_fixtures() {
        let report = check_tambara_axioms(&RightAdjoint::new(&r), CheckMode::Exhaustive).unwrap();
        assert!(report.passed(), "{name}\n{report}");
    }
}

#[test]
fn carrier_sizes_of_the_adjoint_of_a_mod_2() {
    // Fixed pairs: n ∈ A/2 free, x ∈ A/2 with res n = res(x)²; underlying
    // pairs: x ∈ Z/2 and n with res n = x², which leaves 2 choices of n each.
    let r = burnside_mod_green(2).unwrap();
    let f = RightAdjoint::new(&r);
    assert_eq!(f.fixed_elements().unwrap().len(), 8);
    assert_eq!(f.under_elements().unwrap().len(), 4);
}

#[test]
fn norm_ignores_the_second_coordinate() {
    let f = RightAdjoint::new(&Burnside);
    let n = BurnsideElement::new(2, 1);
    for x in [2, -2] {
        let e = f.under_element(n.clone(), BigInt::from(x)).unwrap();
        let image = f.norm(&e);
        assert_eq!(image, AdjointElement::new(BurnsideElement::new(4, 6), n.clone()));
    }
    // (t, x) would need res t = 2 to be a product x·x̄ = x², which fails.
    assert!(f.under_element(BurnsideElement::t(), BigInt::from(1)).is_err());
}

#[test]
fn unit_is_a_tambara_hom() {
    for (name, s) in tambara_fixtures() {
        let report = check_unit(&s);
        assert!(report.passed(), "{name}\n{report}");
    }
}

#[test]
fn adjunction_bijection_on_fixture_pairs() {
    let mut nonempty = 0;
    for (sname, s) in tambara_fixtures() {
        for (rname, r) in green_fixtures() {
            let out = verify_adjunction(&s, &r);
            assert!(out.passed(), "{sname} vs {rname}\n{out}");
            assert_eq!(out.green_homs, out.tambara_homs);
            if out.green_homs > 0 {
                nonempty += 1;
            }
        }
    }
    assert!(nonempty >= 3, "only {nonempty} fixture pairs have homs");
}

#[test]
fn zero_functor_is_terminal_on_both_sides() {
    let zero = FiniteTambaraFunctor::zero_functor();
    for (name, s) in tambara_fixtures() {
        assert_eq!(green_homs(s.green(), zero.green()).len(), 1, "{name}");
        let fz = tabulate_adjoint(zero.green());
        assert_eq!(tambara_homs(&s, &fz.table).len(), 1, "{name}");
    }
}

#[test]
fn transpose_is_natural_in_the_green_argument() {
    let s = burnside_mod(3).unwrap();
    let greens = green_fixtures();
    for (aname, a) in &greens {
        for (bname, b) in &greens {
            let report = verify_naturality(&s, a, b);
            assert!(report.passed(), "{aname} → {bname}\n{report}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_of_burnside_satisfies_sampled_axioms(seed in any::<u64>()) {
        let f = RightAdjoint::new(&Burnside);
        let report = check_tambara_axioms(&f, CheckMode::Sampled { seed, count: 16 }).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn unit_on_burnside_lands_in_the_adjoint(a in -50i64..50, b in -50i64..50, u in -50i64..50) {
        let f = RightAdjoint::new(&Burnside);
        let r = Burnside;
        let s = BurnsideElement::new(a, b);
        let eta = tambara_core::adjoint::unit_fixed(&r, &s);
        prop_assert!(f.is_fixed_member(&eta));
        prop_assert_eq!(&eta.n, &r.norm(&r.res(&s)));
        let eta_u = tambara_core::adjoint::unit_under(&r, &BigInt::from(u));
        prop_assert!(f.is_under_member(&eta_u));
        prop_assert_eq!(f.res(&eta), tambara_core::adjoint::unit_under(&r, &r.res(&s)));
    }
}
