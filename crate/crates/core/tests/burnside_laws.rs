use num_bigint::BigInt;
use proptest::prelude::*;
use tambara_core::finite::{burnside_mod, burnside_mod_green, burnside_mod_unchecked};
use tambara_core::gset::{dependent_product, fold};
use tambara_core::{
    check_green_axioms, check_tambara_axioms, Burnside, BurnsideElement, CheckMode, GMap, GSet, GreenFunctor,
    TambaraFunctor,
};

fn elem(a: i64, b: i64) -> BurnsideElement {
    BurnsideElement::new(a, b)
}

fn reduce(k: &BigInt, n: u64) -> usize {
    let n = BigInt::from(n);
    let r = ((k % &n) + &n) % &n;
    usize::try_from(r).unwrap()
}

fn fixed_index(e: &BurnsideElement, n: u64) -> usize {
    reduce(&e.a, n) + n as usize * reduce(&e.b, n)
}

#[test]
fn closed_forms() {
    let r = Burnside;
    let t = BurnsideElement::t();
    assert_eq!(r.fixed_mul(&t, &t), elem(0, 2));
    assert_eq!(r.res(&elem(3, 4)), BigInt::from(11));
    assert_eq!(r.tr(&BigInt::from(5)), elem(0, 5));
    assert_eq!(r.conj(&BigInt::from(-7)), BigInt::from(-7));
    assert_eq!(r.t(), t);
    for m in -20i64..=20 {
        let expected = elem(m, (m * m - m) / 2);
        assert_eq!(r.norm(&BigInt::from(m)), expected, "N({m})");
    }
    assert_eq!(r.show_fixed(&elem(-1, 1)), "-1 + t");
}

#[test]
fn norm_matches_coinduction() {
    // N(m) is the class of ∏_q(m·C2 → C2) for the quotient q: C2 → ∗.
    for m in 0..=6usize {
        let pi = dependent_product(&fold(GSet::free_orbit(), m), &GMap::quotient()).unwrap();
        let class = elem(pi.object.fixed_count() as i64, pi.object.free_orbit_count() as i64);
        assert_eq!(Burnside.norm(&BigInt::from(m)), class, "m = {m}");
    }
}

#[test]
fn reduction_mod_n_commutes_with_green_operations() {
    let r = Burnside;
    let range = -6i64..=6;
    for n in 2..=4u64 {
        let q = burnside_mod_green(n).unwrap();
        for a in range.clone() {
            for b in range.clone() {
                let x = elem(a, b);
                let xi = fixed_index(&x, n);
                assert_eq!(q.res(&xi), reduce(&r.res(&x), n));
                for c in range.clone() {
                    for d in range.clone() {
                        let y = elem(c, d);
                        let yi = fixed_index(&y, n);
                        assert_eq!(q.fixed_add(&xi, &yi), fixed_index(&r.fixed_add(&x, &y), n));
                        assert_eq!(q.fixed_mul(&xi, &yi), fixed_index(&r.fixed_mul(&x, &y), n));
                    }
                }
            }
            let m = BigInt::from(a);
            let mi = reduce(&m, n);
            assert_eq!(q.tr(&mi), fixed_index(&r.tr(&m), n));
            assert_eq!(q.conj(&mi), mi);
        }
    }
}

#[test]
fn odd_reduction_commutes_with_the_norm() {
    let q = burnside_mod(3).unwrap();
    for m in -12i64..=12 {
        let m = BigInt::from(m);
        assert_eq!(q.norm(&reduce(&m, 3)), fixed_index(&Burnside.norm(&m), 3));
    }
}

#[test]
fn even_reductions_are_green_but_not_tambara() {
    for n in [2, 4] {
        let green = burnside_mod_green(n).unwrap();
        assert!(check_green_axioms(&green, CheckMode::Exhaustive).unwrap().passed());
        assert!(burnside_mod(n).is_err());
        let raw = burnside_mod_unchecked(n).unwrap();
        let report = check_tambara_axioms(&raw, CheckMode::Exhaustive).unwrap();
        assert!(report.failed_identities().contains(&"N(x+y) = N(x)+N(y)+tr(x·conj(y))"), "{report}");
    }
}

#[test]
fn odd_reductions_are_tambara() {
    for n in [3, 5] {
        let q = burnside_mod(n).unwrap();
        assert!(check_tambara_axioms(&q, CheckMode::Exhaustive).unwrap().passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn burnside_satisfies_the_tambara_axioms(seed in any::<u64>()) {
        let report = check_tambara_axioms(&Burnside, CheckMode::Sampled { seed, count: 20 }).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn norm_is_multiplicative_and_additive_up_to_transfer(x in -1000i64..1000, y in -1000i64..1000) {
        let r = Burnside;
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert_eq!(r.norm(&(&x * &y)), r.fixed_mul(&r.norm(&x), &r.norm(&y)));
        let rhs = r.fixed_add(&r.fixed_add(&r.norm(&x), &r.norm(&y)), &r.tr(&(&x * &y)));
        prop_assert_eq!(r.norm(&(&x + &y)), rhs);
        prop_assert_eq!(r.res(&r.norm(&x)), &x * &x);
    }
}
