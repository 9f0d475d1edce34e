//! Images of the pushout generators under the co-structure maps.
//!
//! Each natural operation on Tambara functors (restriction, norm, transfer,
//! addition at either level) is co-represented by a map between free
//! Tambara functors, determined by where it sends `x` and `n`. The stated
//! image of `n` is compared with the norm computed directly from the image
//! of `x`.

use std::fmt;
use std::str::FromStr;

use super::hom::{check_hom, green_hom_extend};
use super::lincomb::LinComb;
use super::tambara_fixed::TfBasis;
use super::tambara_underlying::TuBasis;
use super::{FreeTambaraFixed, FreeTambaraUnderlying, UMono};
use crate::functor::{GreenFunctor, Report, TambaraFunctor, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoMap {
    /// `x_{C2} ↦ res(x_∗)`.
    CoRestriction,
    /// `x_∗ ↦ n`.
    CoNorm,
    /// `x_∗ ↦ tr(x_{C2})`.
    CoTransfer,
    /// `x_{C2} ↦ y + z`.
    CoAddUnderlying,
    /// `x_∗ ↦ y + z`.
    CoAddFixed,
}

impl CoMap {
    pub const ALL: [CoMap; 5] =
        [CoMap::CoRestriction, CoMap::CoNorm, CoMap::CoTransfer, CoMap::CoAddUnderlying, CoMap::CoAddFixed];
}

impl fmt::Display for CoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoMap::CoRestriction => "coR",
            CoMap::CoNorm => "coN",
            CoMap::CoTransfer => "coT",
            CoMap::CoAddUnderlying => "coAddUnderlying",
            CoMap::CoAddFixed => "coAddFixed",
        })
    }
}

impl FromStr for CoMap {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CoMap::ALL.into_iter().find(|k| k.to_string() == s).ok_or_else(|| format!("unknown co-map `{s}`"))
    }
}

/// Rendered generator images of one co-map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComapImages {
    pub kind: CoMap,
    pub x_image: String,
    /// The image of `n` as given by the closed formula.
    pub n_image: String,
    /// `N(res ξ)` or `N(ξ)` computed by the norm operation.
    pub n_direct: String,
    /// The map determined by the images commutes with every operation on
    /// basis elements of degree at most 3.
    pub hom_check: Report,
}

impl ComapImages {
    pub fn consistent(&self) -> bool {
        self.n_image == self.n_direct && self.hom_check.passed()
    }
}

const CHECK_DEGREE: u32 = 3;

fn tf_mono(t: bool, x: Vec<u32>, n: Vec<u32>) -> LinComb<TfBasis> {
    LinComb::monomial(TfBasis::new(t, x, n))
}

fn tu_plain(n: Vec<u32>) -> LinComb<TuBasis> {
    LinComb::monomial(TuBasis::plain(n))
}

fn tu_tr(m: UMono) -> LinComb<TuBasis> {
    let k = m.gens();
    LinComb::monomial(TuBasis::transfer(&m, vec![0; k]))
}

fn fixed_source_check<R: TambaraFunctor>(target: &R, xi: Value<R::Fixed, R::Under>, nu: R::Fixed) -> Report {
    let src = FreeTambaraFixed::new();
    let hom = green_hom_extend(&src, target, vec![xi], Some(vec![nu])).expect("compatible images");
    let fixed: Vec<_> = FreeTambaraFixed::basis(CHECK_DEGREE).into_iter().map(LinComb::monomial).collect();
    let under: Vec<_> = FreeTambaraFixed::under_basis(CHECK_DEGREE).into_iter().map(LinComb::monomial).collect();
    check_hom(&src, &hom, &fixed, &under)
}

fn under_source_check<R: TambaraFunctor>(target: &R, xi: R::Under, nu: R::Fixed) -> Report {
    let src = FreeTambaraUnderlying::new();
    let hom = green_hom_extend(&src, target, vec![Value::Underlying(xi)], Some(vec![nu])).expect("compatible images");
    let fixed: Vec<_> = FreeTambaraUnderlying::basis(CHECK_DEGREE).into_iter().map(LinComb::monomial).collect();
    let under: Vec<_> = FreeTambaraUnderlying::under_basis(CHECK_DEGREE).into_iter().map(LinComb::monomial).collect();
    check_hom(&src, &hom, &fixed, &under)
}

/// The generator images of a co-map, with both derivations of the image
/// of `n` and a homomorphism check.
pub fn comap_images(kind: CoMap) -> ComapImages {
    match kind {
        CoMap::CoRestriction => {
            // A[x_{C2}] → A[x_∗]: x ↦ res x_∗, n ↦ n_∗.
            let r = FreeTambaraFixed::new();
            let xi = r.res(&r.x());
            let nu = r.n();
            let direct = r.norm(&xi);
            let hom_check = under_source_check(&r, xi.clone(), nu.clone());
            ComapImages {
                kind,
                x_image: r.show_under(&xi),
                n_image: r.show_fixed(&nu),
                n_direct: r.show_fixed(&direct),
                hom_check,
            }
        }
        CoMap::CoNorm => {
            // A[x_∗] → A[x_{C2}]: x_∗ ↦ n, n_∗ ↦ n².
            let r = FreeTambaraUnderlying::new();
            let xi = r.n();
            let nu = tu_plain(vec![2]);
            let direct = r.norm(&r.res(&xi));
            let hom_check = fixed_source_check(&r, Value::Fixed(xi.clone()), nu.clone());
            ComapImages {
                kind,
                x_image: r.show_fixed(&xi),
                n_image: r.show_fixed(&nu),
                n_direct: r.show_fixed(&direct),
                hom_check,
            }
        }
        CoMap::CoTransfer => {
            // A[x_∗] → A[x_{C2}]: x_∗ ↦ tr(x), n_∗ ↦ 2n + tr(x²).
            let r = FreeTambaraUnderlying::new();
            let xi = r.tr(&r.x());
            let nu = tu_plain(vec![1]).scale(&2.into()).add(&tu_tr(UMono::single(2, 0)));
            let direct = r.norm(&r.res(&xi));
            let hom_check = fixed_source_check(&r, Value::Fixed(xi.clone()), nu.clone());
            ComapImages {
                kind,
                x_image: r.show_fixed(&xi),
                n_image: r.show_fixed(&nu),
                n_direct: r.show_fixed(&direct),
                hom_check,
            }
        }
        CoMap::CoAddUnderlying => {
            // A[x_{C2}] → A[y_{C2}, z_{C2}]: x ↦ y + z, n ↦ n_y + n_z + tr(y·z̄).
            let r = FreeTambaraUnderlying::with_generators(2);
            let xi = r.under_add(&r.x_i(0), &r.x_i(1));
            let nu = r.n_i(0).add(&r.n_i(1)).add(&tu_tr(UMono::new(vec![1, 0], vec![0, 1])));
            let direct = r.norm(&xi);
            let hom_check = under_source_check(&r, xi.clone(), nu.clone());
            ComapImages {
                kind,
                x_image: r.show_under(&xi),
                n_image: r.show_fixed(&nu),
                n_direct: r.show_fixed(&direct),
                hom_check,
            }
        }
        CoMap::CoAddFixed => {
            // A[x_∗] → A[y_∗, z_∗]: x ↦ y + z, n ↦ n_y + n_z + t·y·z.
            let r = FreeTambaraFixed::with_generators(2);
            let xi = r.fixed_add(&r.x_i(0), &r.x_i(1));
            let nu = r.n_i(0).add(&r.n_i(1)).add(&tf_mono(true, vec![1, 1], vec![0, 0]));
            let direct = r.norm(&r.res(&xi));
            let hom_check = fixed_source_check(&r, Value::Fixed(xi.clone()), nu.clone());
            ComapImages {
                kind,
                x_image: r.show_fixed(&xi),
                n_image: r.show_fixed(&nu),
                n_direct: r.show_fixed(&direct),
                hom_check,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_images_match_direct_norms() {
        for kind in CoMap::ALL {
            let im = comap_images(kind);
            assert!(im.consistent(), "{kind}: {} vs {}\n{}", im.n_image, im.n_direct, im.hom_check);
        }
    }

    #[test]
    fn renderings() {
        assert_eq!(comap_images(CoMap::CoTransfer).n_image, "2n + t_2");
        assert_eq!(comap_images(CoMap::CoNorm).n_image, "n^2");
        assert_eq!(comap_images(CoMap::CoRestriction).x_image, "x");
        assert_eq!("coAddFixed".parse::<CoMap>(), Ok(CoMap::CoAddFixed));
    }
}
