//! The free Green functor on an underlying-level generator `x`.
//!
//! Underlying level `Z[x, x̄]` with `conj` swapping `x` and `x̄`. The fixed
//! level has basis `1` and `t_{i,j} = tr(xⁱx̄ʲ)` for `i ≥ j`, with
//! `t_{0,0} = t` and `t_{i,j}·t_{k,l} = t_{i+k,j+l} + t_{i+l,j+k}`.

use num_bigint::BigInt;
use rand::RngCore;

use super::lincomb::{random_lincomb, LinComb, Monomial};
use super::{random_exps, under_conj, under_product, UMono, SAMPLE_COEFF, SAMPLE_DEGREE, SAMPLE_TERMS};
use crate::functor::{sample_index, GreenFunctor};

/// `1` or `t_{i,j}` (stored with `i ≥ j`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GuBasis {
    pub deg: u32,
    pub t: Option<(u32, u32)>,
}

impl GuBasis {
    pub fn one() -> Self {
        GuBasis { deg: 0, t: None }
    }

    /// `t_{i,j}`, symmetric in `i, j`.
    pub fn t(i: u32, j: u32) -> Self {
        GuBasis { deg: i + j, t: Some((i.max(j), i.min(j))) }
    }
}

impl Monomial for GuBasis {
    fn render(&self) -> String {
        match self.t {
            None => String::new(),
            Some((0, 0)) => "t".into(),
            Some((i, j)) => format!("t_{{{i},{j}}}"),
        }
    }
}

pub type GuFixed = LinComb<GuBasis>;
pub type GuUnder = LinComb<UMono>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FreeGreenUnderlying;

impl FreeGreenUnderlying {
    pub fn x(&self) -> GuUnder {
        LinComb::monomial(UMono::single(1, 0))
    }

    pub fn t_ij(&self, i: u32, j: u32) -> GuFixed {
        LinComb::monomial(GuBasis::t(i, j))
    }

    pub fn basis(max_deg: u32) -> Vec<GuBasis> {
        let mut out = vec![GuBasis::one()];
        for d in 0..=max_deg {
            for j in 0..=d / 2 {
                out.push(GuBasis::t(d - j, j));
            }
        }
        out
    }

    pub fn under_basis(max_deg: u32) -> Vec<UMono> {
        (0..=max_deg).flat_map(|d| (0..=d).map(move |j| UMono::single(d - j, j))).collect()
    }
}

fn basis_mul(a: &GuBasis, b: &GuBasis) -> GuFixed {
    match (a.t, b.t) {
        (None, _) => LinComb::monomial(b.clone()),
        (_, None) => LinComb::monomial(a.clone()),
        (Some((i, j)), Some((k, l))) => {
            LinComb::monomial(GuBasis::t(i + k, j + l)).add(&LinComb::monomial(GuBasis::t(i + l, j + k)))
        }
    }
}

impl GreenFunctor for FreeGreenUnderlying {
    type Fixed = GuFixed;
    type Under = GuUnder;

    fn fixed_zero(&self) -> GuFixed {
        LinComb::zero()
    }
    fn fixed_one(&self) -> GuFixed {
        LinComb::monomial(GuBasis::one())
    }
    fn fixed_add(&self, a: &GuFixed, b: &GuFixed) -> GuFixed {
        a.add(b)
    }
    fn fixed_neg(&self, a: &GuFixed) -> GuFixed {
        a.neg()
    }
    fn fixed_mul(&self, a: &GuFixed, b: &GuFixed) -> GuFixed {
        a.mul_with(b, basis_mul)
    }
    fn under_zero(&self) -> GuUnder {
        LinComb::zero()
    }
    fn under_one(&self) -> GuUnder {
        LinComb::monomial(UMono::one(1))
    }
    fn under_add(&self, a: &GuUnder, b: &GuUnder) -> GuUnder {
        a.add(b)
    }
    fn under_neg(&self, a: &GuUnder) -> GuUnder {
        a.neg()
    }
    fn under_mul(&self, a: &GuUnder, b: &GuUnder) -> GuUnder {
        under_product(a, b)
    }
    fn conj(&self, x: &GuUnder) -> GuUnder {
        under_conj(x)
    }
    fn res(&self, a: &GuFixed) -> GuUnder {
        a.map_linear(|b| match b.t {
            None => LinComb::monomial(UMono::one(1)),
            Some((i, j)) => LinComb::monomial(UMono::single(i, j)).add(&LinComb::monomial(UMono::single(j, i))),
        })
    }
    fn tr(&self, x: &GuUnder) -> GuFixed {
        x.map_linear(|m| LinComb::monomial(GuBasis::t(m.x[0], m.xbar[0])))
    }
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> GuFixed {
        random_lincomb(rng, SAMPLE_TERMS, SAMPLE_COEFF, |rng| {
            if sample_index(rng, 4) == 0 {
                GuBasis::one()
            } else {
                let e = random_exps(rng, 2, SAMPLE_DEGREE);
                GuBasis::t(e[0], e[1])
            }
        })
    }
    fn sample_under(&self, rng: &mut dyn RngCore) -> GuUnder {
        super::random_under(rng, 1, true)
    }
    fn show_fixed(&self, a: &GuFixed) -> String {
        a.to_string()
    }
    fn show_under(&self, x: &GuUnder) -> String {
        x.to_string()
    }
    fn fixed_int(&self, k: &BigInt) -> GuFixed {
        self.fixed_one().scale(k)
    }
    fn under_int(&self, k: &BigInt) -> GuUnder {
        self.under_one().scale(k)
    }
}
