//! The free Green functor on a fixed-level generator `x`.
//!
//! Fixed level `Z[x] ⊕ t·Z[x]` with `t² = 2t`; underlying level `Z[x]` with
//! trivial conjugation. `res(p + tq) = p + 2q` and `tr(r) = t·r`.

use num_bigint::BigInt;
use rand::RngCore;

use super::lincomb::{power_factor, random_lincomb, LinComb, Monomial};
use super::{random_exps, under_product, UMono, SAMPLE_COEFF, SAMPLE_DEGREE, SAMPLE_TERMS};
use crate::functor::{sample_index, GreenFunctor};

/// `x^deg` or `t·x^deg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfBasis {
    pub deg: u32,
    pub t: bool,
}

impl Monomial for GfBasis {
    fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.t {
            parts.push("t".into());
        }
        parts.extend(power_factor("x", self.deg));
        parts.join("*")
    }
}

pub type GfFixed = LinComb<GfBasis>;
pub type GfUnder = LinComb<UMono>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FreeGreenFixed;

impl FreeGreenFixed {
    pub fn x(&self) -> GfFixed {
        LinComb::monomial(GfBasis { deg: 1, t: false })
    }

    pub fn basis(max_deg: u32) -> Vec<GfBasis> {
        (0..=max_deg).flat_map(|deg| [GfBasis { deg, t: false }, GfBasis { deg, t: true }]).collect()
    }

    pub fn under_basis(max_deg: u32) -> Vec<UMono> {
        (0..=max_deg).map(|d| UMono::single(d, 0)).collect()
    }
}

fn basis_mul(a: &GfBasis, b: &GfBasis) -> GfFixed {
    let m = GfBasis { deg: a.deg + b.deg, t: a.t || b.t };
    let c = if a.t && b.t { 2 } else { 1 };
    LinComb::term(m, c)
}

impl GreenFunctor for FreeGreenFixed {
    type Fixed = GfFixed;
    type Under = GfUnder;

    fn fixed_zero(&self) -> GfFixed {
        LinComb::zero()
    }
    fn fixed_one(&self) -> GfFixed {
        LinComb::monomial(GfBasis { deg: 0, t: false })
    }
    fn fixed_add(&self, a: &GfFixed, b: &GfFixed) -> GfFixed {
        a.add(b)
    }
    fn fixed_neg(&self, a: &GfFixed) -> GfFixed {
        a.neg()
    }
    fn fixed_mul(&self, a: &GfFixed, b: &GfFixed) -> GfFixed {
        a.mul_with(b, basis_mul)
    }
    fn under_zero(&self) -> GfUnder {
        LinComb::zero()
    }
    fn under_one(&self) -> GfUnder {
        LinComb::monomial(UMono::one(1))
    }
    fn under_add(&self, a: &GfUnder, b: &GfUnder) -> GfUnder {
        a.add(b)
    }
    fn under_neg(&self, a: &GfUnder) -> GfUnder {
        a.neg()
    }
    fn under_mul(&self, a: &GfUnder, b: &GfUnder) -> GfUnder {
        under_product(a, b)
    }
    fn conj(&self, x: &GfUnder) -> GfUnder {
        x.clone()
    }
    fn res(&self, a: &GfFixed) -> GfUnder {
        a.map_linear(|b| LinComb::term(UMono::single(b.deg, 0), if b.t { 2 } else { 1 }))
    }
    fn tr(&self, x: &GfUnder) -> GfFixed {
        x.map_linear(|m| LinComb::monomial(GfBasis { deg: m.x[0], t: true }))
    }
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> GfFixed {
        random_lincomb(rng, SAMPLE_TERMS, SAMPLE_COEFF, |rng| GfBasis {
            deg: random_exps(rng, 1, SAMPLE_DEGREE)[0],
            t: sample_index(rng, 2) == 1,
        })
    }
    fn sample_under(&self, rng: &mut dyn RngCore) -> GfUnder {
        super::random_under(rng, 1, false)
    }
    fn show_fixed(&self, a: &GfFixed) -> String {
        a.to_string()
    }
    fn show_under(&self, x: &GfUnder) -> String {
        x.to_string()
    }
    fn fixed_int(&self, k: &BigInt) -> GfFixed {
        self.fixed_one().scale(k)
    }
    fn under_int(&self, k: &BigInt) -> GfUnder {
        self.under_one().scale(k)
    }
}
