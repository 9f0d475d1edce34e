//! The bispan representing each basis monomial of a free functor.
//!
//! The free functor on a generator at orbit `X` (`∗` or `C2`) has
//! `A[x_X](Y) = bispans X → Y`, and evaluating such a bispan at the
//! generator image reproduces the homomorphism out of the free functor.

use super::green_fixed::GfBasis;
use super::green_underlying::GuBasis;
use super::tambara_fixed::TfBasis;
use super::tambara_underlying::TuBasis;
use super::{FreeGreenFixed, FreeGreenUnderlying, FreeTambaraFixed, FreeTambaraUnderlying, UMono};
use crate::bispan::Bispan;
use crate::gset::{GMap, GSet, IndexingSystem};

/// What sits to the right of `U`.
#[derive(Clone, Copy)]
enum Shape {
    /// `U → ∗ = ∗`: a product (and norms of free orbits) at the fixed level.
    Norm,
    /// `U → C2 → ∗`: a transferred product.
    Transfer,
    /// `U → C2 = C2`: a product at the underlying level.
    Underlying,
}

/// `[X ← U → V → T]` where `U` has `fixed` fixed points and one free orbit
/// per entry of `legs` (the image of its `o.0` point in `X`).
fn build(x: GSet, fixed: usize, legs: &[usize], shape: Shape, indexing: IndexingSystem) -> Bispan {
    let u = GSet::new(fixed, legs.len());
    let f = GMap::from_orbit_images(u, x, &vec![0; fixed], legs).expect("legs land in X");
    let v = match shape {
        Shape::Norm => GSet::point(),
        Shape::Transfer | Shape::Underlying => GSet::free_orbit(),
    };
    let g = GMap::from_orbit_images(u, v, &vec![0; fixed], &vec![0; legs.len()]).expect("orbits map to V");
    let h = match shape {
        Shape::Transfer => GMap::quotient(),
        _ => GMap::identity(v),
    };
    Bispan::new(f, g, h, indexing).expect("shapes respect the indexing system")
}

/// Legs for `xⁱx̄ʲ` on the free orbit: `i` identity and `j` twisted summands.
fn twisted_legs(i: u32, j: u32) -> Vec<usize> {
    std::iter::repeat_n(0, i as usize).chain(std::iter::repeat_n(1, j as usize)).collect()
}

/// Bispans for basis monomials at both levels.
pub trait RepresentingBispan {
    type FixedBasis;
    fn fixed_bispan(&self, b: &Self::FixedBasis) -> Bispan;
    fn under_bispan(&self, m: &UMono) -> Bispan;
}

impl RepresentingBispan for FreeGreenFixed {
    type FixedBasis = GfBasis;

    /// `xᵏ ↦ [∗ ← k∗ → ∗ = ∗]`, `t·xᵏ ↦ [∗ ← k·C2 → C2 → ∗]`.
    fn fixed_bispan(&self, b: &GfBasis) -> Bispan {
        let k = b.deg as usize;
        if b.t {
            build(GSet::point(), 0, &vec![0; k], Shape::Transfer, IndexingSystem::Trivial)
        } else {
            build(GSet::point(), k, &[], Shape::Norm, IndexingSystem::Trivial)
        }
    }

    fn under_bispan(&self, m: &UMono) -> Bispan {
        build(GSet::point(), 0, &vec![0; m.x[0] as usize], Shape::Underlying, IndexingSystem::Trivial)
    }
}

impl RepresentingBispan for FreeGreenUnderlying {
    type FixedBasis = GuBasis;

    /// `1 ↦ [C2 ← ∅ → ∗ = ∗]`, `t_{i,j} ↦ [C2 ← (i+j)·C2 → C2 → ∗]` with
    /// `i` identity and `j` twisted legs.
    fn fixed_bispan(&self, b: &GuBasis) -> Bispan {
        match b.t {
            None => build(GSet::free_orbit(), 0, &[], Shape::Norm, IndexingSystem::Trivial),
            Some((i, j)) => build(GSet::free_orbit(), 0, &twisted_legs(i, j), Shape::Transfer, IndexingSystem::Trivial),
        }
    }

    fn under_bispan(&self, m: &UMono) -> Bispan {
        build(GSet::free_orbit(), 0, &twisted_legs(m.x[0], m.xbar[0]), Shape::Underlying, IndexingSystem::Trivial)
    }
}

impl RepresentingBispan for FreeTambaraFixed {
    type FixedBasis = TfBasis;

    /// `xᵃnᵇ ↦ [∗ ← a∗ ⊔ b·C2 → ∗ = ∗]`; `t·xᵉnᵇ = tr(x^{e+2b})`.
    fn fixed_bispan(&self, b: &TfBasis) -> Bispan {
        assert_eq!(b.gens(), 1, "representing bispans are for one generator");
        if b.t {
            let k = (b.x[0] + 2 * b.n[0]) as usize;
            build(GSet::point(), 0, &vec![0; k], Shape::Transfer, IndexingSystem::Complete)
        } else {
            build(GSet::point(), b.x[0] as usize, &vec![0; b.n[0] as usize], Shape::Norm, IndexingSystem::Complete)
        }
    }

    fn under_bispan(&self, m: &UMono) -> Bispan {
        build(GSet::point(), 0, &vec![0; m.x[0] as usize], Shape::Underlying, IndexingSystem::Complete)
    }
}

impl RepresentingBispan for FreeTambaraUnderlying {
    type FixedBasis = TuBasis;

    /// `nᵃ ↦ [C2 ← a·C2 → ∗ = ∗]`; `nᵃ·t_i = tr(x^{i+a}x̄ᵃ)`.
    fn fixed_bispan(&self, b: &TuBasis) -> Bispan {
        assert_eq!(b.gens(), 1, "representing bispans are for one generator");
        let a = b.n[0];
        if b.t {
            let legs = twisted_legs(b.m.x[0] + a, b.m.xbar[0] + a);
            build(GSet::free_orbit(), 0, &legs, Shape::Transfer, IndexingSystem::Complete)
        } else {
            build(GSet::free_orbit(), 0, &vec![0; a as usize], Shape::Norm, IndexingSystem::Complete)
        }
    }

    fn under_bispan(&self, m: &UMono) -> Bispan {
        build(GSet::free_orbit(), 0, &twisted_legs(m.x[0], m.xbar[0]), Shape::Underlying, IndexingSystem::Complete)
    }
}
