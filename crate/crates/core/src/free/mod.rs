//! Normal forms for the free Green and Tambara functors on one generator,
//! either at the fixed level (`x = x_∗`) or at the underlying level
//! (`x = x_{C2}`), plus their two-generator versions used by the co-maps.
//!
//! Every element is a [`LinComb`] over a canonical monomial basis; products
//! and structure maps are computed on basis monomials and extended
//! (bi)linearly, so results are always in normal form.

use std::cmp::Ordering;

use rand::RngCore;

use crate::functor::sample_index;

pub mod bispans;
pub mod comap;
pub mod green_fixed;
pub mod green_underlying;
pub mod hom;
pub mod lincomb;
pub mod tambara_fixed;
pub mod tambara_underlying;

pub use green_fixed::FreeGreenFixed;
pub use green_underlying::FreeGreenUnderlying;
pub use lincomb::{render_terms, LinComb, Monomial};
pub use tambara_fixed::FreeTambaraFixed;
pub use tambara_underlying::FreeTambaraUnderlying;

use lincomb::power_factor;

/// Generator names: `x` for one generator, `y, z` for two.
pub fn generator_names(k: usize) -> Vec<String> {
    match k {
        1 => vec!["x".into()],
        2 => vec!["y".into(), "z".into()],
        _ => (1..=k).map(|i| format!("x{i}")).collect(),
    }
}

/// Names of the norm classes `n = N(res x)` or `N(x)`.
pub fn norm_names(k: usize) -> Vec<String> {
    if k == 1 {
        vec!["n".into()]
    } else {
        generator_names(k).into_iter().map(|g| format!("n_{g}")).collect()
    }
}

/// A monomial `x^a · conj(x)^b` in the underlying ring (multi-indexed for
/// several generators). For a fixed generator `b` is always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UMono {
    pub x: Vec<u32>,
    pub xbar: Vec<u32>,
}

impl UMono {
    pub fn one(k: usize) -> Self {
        UMono { x: vec![0; k], xbar: vec![0; k] }
    }

    pub fn new(x: Vec<u32>, xbar: Vec<u32>) -> Self {
        debug_assert_eq!(x.len(), xbar.len());
        UMono { x, xbar }
    }

    /// `x^i conj(x)^j` for a single generator.
    pub fn single(i: u32, j: u32) -> Self {
        UMono::new(vec![i], vec![j])
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.xbar.iter().sum::<u32>()
    }

    pub fn gens(&self) -> usize {
        self.x.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    pub fn mul(&self, other: &UMono) -> UMono {
        UMono { x: add_exps(&self.x, &other.x), xbar: add_exps(&self.xbar, &other.xbar) }
    }

    pub fn conj(&self) -> UMono {
        UMono { x: self.xbar.clone(), xbar: self.x.clone() }
    }

    /// Split off the largest `(x·x̄)^β` factor: returns `β` and the reduced
    /// remainder (with `min(a_i, b_i) = 0`).
    pub fn split_norms(&self) -> (Vec<u32>, UMono) {
        let beta: Vec<u32> = self.x.iter().zip(&self.xbar).map(|(a, b)| *a.min(b)).collect();
        let x = self.x.iter().zip(&beta).map(|(a, b)| a - b).collect();
        let xbar = self.xbar.iter().zip(&beta).map(|(a, b)| a - b).collect();
        (beta, UMono { x, xbar })
    }

    /// The representative of `{m, conj m}` with the larger `x` exponents.
    pub fn canonical_up_to_conj(&self) -> UMono {
        let c = self.conj();
        if c.x > self.x {
            c
        } else {
            self.clone()
        }
    }

    pub(crate) fn render_factors(&self) -> Vec<String> {
        let names = generator_names(self.gens());
        let mut out: Vec<String> = Vec::new();
        for (i, name) in names.iter().enumerate() {
            out.extend(power_factor(name, self.x[i]));
        }
        for (i, name) in names.iter().enumerate() {
            out.extend(power_factor(&format!("conj({name})"), self.xbar[i]));
        }
        out
    }
}

impl Ord for UMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.x.cmp(&self.x)).then_with(|| other.xbar.cmp(&self.xbar))
    }
}

impl PartialOrd for UMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for UMono {
    fn render(&self) -> String {
        self.render_factors().join("*")
    }
}

pub(crate) fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(p, q)| p + q).collect()
}

/// Random exponent vector of total degree at most `max_deg`.
pub(crate) fn random_exps(rng: &mut dyn RngCore, k: usize, max_deg: u32) -> Vec<u32> {
    let mut budget = sample_index(rng, max_deg as usize + 1) as u32;
    let mut out = vec![0; k];
    for (i, e) in out.iter_mut().enumerate() {
        let v = if i + 1 == k { budget } else { sample_index(rng, budget as usize + 1) as u32 };
        *e = v;
        budget -= v;
    }
    out
}

/// Sampling parameters for random elements: total degree at most 6,
/// coefficients in `[-9, 9]`, at most four terms.
pub(crate) const SAMPLE_DEGREE: u32 = 6;
pub(crate) const SAMPLE_COEFF: i64 = 9;
pub(crate) const SAMPLE_TERMS: usize = 4;

/// A random underlying element (`with_conj` false for fixed generators).
pub(crate) fn random_under(rng: &mut dyn RngCore, k: usize, with_conj: bool) -> LinComb<UMono> {
    lincomb::random_lincomb(rng, SAMPLE_TERMS, SAMPLE_COEFF, |rng| {
        if with_conj {
            let all = random_exps(rng, 2 * k, SAMPLE_DEGREE);
            UMono::new(all[..k].to_vec(), all[k..].to_vec())
        } else {
            UMono::new(random_exps(rng, k, SAMPLE_DEGREE), vec![0; k])
        }
    })
}

pub(crate) fn under_product(a: &LinComb<UMono>, b: &LinComb<UMono>) -> LinComb<UMono> {
    a.mul_with(b, |p, q| LinComb::monomial(p.mul(q)))
}

pub(crate) fn under_conj(a: &LinComb<UMono>) -> LinComb<UMono> {
    a.map_linear(|m| LinComb::monomial(m.conj()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn umono_order_and_rendering() {
        let a = UMono::single(2, 0);
        let b = UMono::single(1, 1);
        let c = UMono::single(0, 2);
        assert!(a < b && b < c);
        assert_eq!(b.render(), "x*conj(x)");
        assert_eq!(c.render(), "conj(x)^2");
        assert_eq!(UMono::one(1).render(), "");
        assert_eq!(UMono::new(vec![1, 0], vec![0, 1]).render(), "y*conj(z)");
    }

    #[test]
    fn norm_splitting() {
        let (beta, m) = UMono::single(3, 1).split_norms();
        assert_eq!(beta, vec![1]);
        assert_eq!(m, UMono::single(2, 0));
        assert_eq!(UMono::single(0, 2).canonical_up_to_conj(), UMono::single(2, 0));
    }
}
