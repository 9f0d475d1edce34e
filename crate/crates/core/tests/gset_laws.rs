use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tambara_core::bispan::{random_gset, random_map};
use tambara_core::gset::{coproduct, dependent_product, exponential_diagram, fold, is_member, pullback};
use tambara_core::{GMap, GSet, IndexingSystem};

fn sets_up_to(max_points: usize) -> Vec<GSet> {
    (0..=max_points).flat_map(|fixed| (0..=(max_points - fixed) / 2).map(move |free| GSet::new(fixed, free))).collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random map `source → target` for a random nonempty-hom pair.
fn some_map(r: &mut ChaCha8Rng, max_points: usize) -> GMap {
    loop {
        let s = random_gset(r, max_points);
        let t = random_gset(r, max_points);
        if let Some(f) = random_map(r, s, t) {
            return f;
        }
    }
}

#[test]
fn isomorphic_sets_have_equal_canonical_forms() {
    for a in sets_up_to(5) {
        for b in sets_up_to(5) {
            let iso = GMap::all(a, b).iter().any(GMap::is_bijective);
            assert_eq!(iso, a == b, "{a} vs {b}");
        }
    }
}

#[test]
fn maps_are_equivariant_and_compose() {
    for a in sets_up_to(3) {
        for b in sets_up_to(3) {
            for f in GMap::all(a, b) {
                for p in a.points() {
                    assert_eq!(f.apply(a.act(p)), b.act(f.apply(p)));
                }
                assert_eq!(f.after(&GMap::identity(a)).unwrap(), f);
                assert_eq!(GMap::identity(b).after(&f).unwrap(), f);
            }
        }
    }
}

#[test]
fn hom_counts_match_orbit_formula() {
    // A fixed point must land on a fixed point; the base point of a free
    // orbit may land anywhere.
    for a in sets_up_to(4) {
        for b in sets_up_to(4) {
            let expected = b.fixed_count().pow(a.fixed_count() as u32) * b.len().pow(a.free_orbit_count() as u32);
            assert_eq!(GMap::all(a, b).len(), expected, "{a} → {b}");
        }
    }
}

#[test]
fn coproduct_is_universal() {
    for a in sets_up_to(2) {
        for b in sets_up_to(2) {
            let c = coproduct(a, b);
            for x in sets_up_to(2) {
                for u in GMap::all(a, x) {
                    for v in GMap::all(b, x) {
                        let n = GMap::all(c.object, x)
                            .into_iter()
                            .filter(|w| w.after(&c.left).unwrap() == u && w.after(&c.right).unwrap() == v)
                            .count();
                        assert_eq!(n, 1);
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_system_is_stable_under_pullback() {
    for a in sets_up_to(3) {
        for b in sets_up_to(3) {
            for f in GMap::all(a, b).into_iter().filter(|f| is_member(f, IndexingSystem::Trivial)) {
                for c in sets_up_to(3) {
                    for g in GMap::all(c, b) {
                        let pb = pullback(&f, &g).unwrap();
                        assert!(is_member(&pb.second, IndexingSystem::Trivial), "{f} pulled back along {g}");
                    }
                }
            }
        }
    }
}

#[test]
fn fold_of_orbit_has_closed_form_coinduction() {
    // ∏_q (m copies of C2 → C2) has m fixed points and (m² − m)/2 free orbits.
    for m in 0..=6usize {
        let h = fold(GSet::free_orbit(), m);
        let pi = dependent_product(&h, &GMap::quotient()).unwrap();
        assert_eq!(pi.object, GSet::new(m, (m * m - m) / 2), "m = {m}");
        assert_eq!(pi.to_base.target(), GSet::point());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pullback_is_universal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = some_map(&mut r, 3);
        let s = f.target();
        let b = random_gset(&mut r, 3);
        let Some(g) = random_map(&mut r, b, s) else { return Ok(()) };
        let pb = pullback(&f, &g).unwrap();
        prop_assert_eq!(f.after(&pb.first).unwrap(), g.after(&pb.second).unwrap());
        let x = random_gset(&mut r, 3);
        for u in GMap::all(x, f.source()) {
            for v in GMap::all(x, b) {
                if f.after(&u).unwrap() != g.after(&v).unwrap() {
                    continue;
                }
                let factorizations = GMap::all(x, pb.object)
                    .into_iter()
                    .filter(|w| pb.first.after(w).unwrap() == u && pb.second.after(w).unwrap() == v)
                    .count();
                prop_assert_eq!(factorizations, 1, "u = {}, v = {}", u, v);
            }
        }
    }

    #[test]
    fn dependent_product_is_right_adjoint_to_pullback(seed in any::<u64>()) {
        // Hom_{/S}(g*X, A) ≅ Hom_{/T}(X, ∏_g A), counted.
        let mut r = rng(seed);
        let g = some_map(&mut r, 3);
        let a = random_gset(&mut r, 3);
        let Some(h) = random_map(&mut r, a, g.source()) else { return Ok(()) };
        let x_set = random_gset(&mut r, 3);
        let Some(x) = random_map(&mut r, x_set, g.target()) else { return Ok(()) };
        let pb = pullback(&g, &x).unwrap();
        let lhs = GMap::all(pb.object, a).into_iter().filter(|w| h.after(w).unwrap() == pb.first).count();
        let pi = dependent_product(&h, &g).unwrap();
        let rhs = GMap::all(x_set, pi.object).into_iter().filter(|w| pi.to_base.after(w).unwrap() == x).count();
        prop_assert_eq!(lhs, rhs, "g = {}, h = {}, x = {}", g, h, x);
    }

    #[test]
    fn exponential_diagram_commutes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = some_map(&mut r, 4);
        let a = random_gset(&mut r, 4);
        let Some(h) = random_map(&mut r, a, g.source()) else { return Ok(()) };
        let d = exponential_diagram(&g, &h).unwrap();
        // S ×_T ∏ → A → S → T equals S ×_T ∏ → ∏ → T.
        let left = g.after(&h.after(&d.f_prime).unwrap()).unwrap();
        let right = d.h_prime.after(&d.g_prime).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(d.g_prime.source(), d.pullback);
    }
}
