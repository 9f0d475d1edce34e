//! Homomorphisms out of the free functors, determined by generator images.
//!
//! A Green functor map out of a free Green functor is fixed by the image
//! `ξ` of `x`; out of a free Tambara functor (viewed as a Green functor) it
//! is fixed by `ξ` together with the image `ν` of the norm class `n`, which
//! must satisfy `res(ν) = res(ξ)²` (fixed generator) or `res(ν) = ξ·conj(ξ)`
//! (underlying generator).

use thiserror::Error;

use super::green_fixed::GfBasis;
use super::green_underlying::GuBasis;
use super::lincomb::{LinComb, Monomial};
use super::tambara_fixed::TfBasis;
use super::tambara_underlying::TuBasis;
use super::{FreeGreenFixed, FreeGreenUnderlying, FreeTambaraFixed, FreeTambaraUnderlying, UMono};
use crate::functor::{GreenFunctor, Level, Report, TambaraFunctor, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("expected {expected} generator images, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("generator image {index} lives at the {found} level, expected {expected}")]
    WrongLevel { index: usize, expected: Level, found: Level },
    #[error("images of the norm classes are required for a free Tambara source")]
    MissingNormImages,
    #[error("norm class images are only meaningful for a free Tambara source")]
    UnexpectedNormImages,
    #[error("image of n_{index} violates {condition}: {detail}")]
    Incompatible { index: usize, condition: &'static str, detail: String },
}

/// A free functor whose elements are combinations of basis monomials.
pub trait FreeObject: GreenFunctor<Fixed = LinComb<Self::FixedBasis>, Under = LinComb<UMono>> {
    type FixedBasis: Monomial;

    fn generator_level(&self) -> Level;
    fn generators(&self) -> usize;
    /// Whether the fixed level contains norm classes `n_i`.
    fn has_norm_classes(&self) -> bool;
    fn fixed_basis_image<R: GreenFunctor + ?Sized>(&self, b: &Self::FixedBasis, im: &Images<'_, R>) -> R::Fixed;
}

/// Generator images in a target functor, with the derived underlying
/// images `res(ξ)` (or `ξ`) precomputed.
pub struct Images<'a, R: GreenFunctor + ?Sized> {
    pub target: &'a R,
    pub xi: Vec<Value<R::Fixed, R::Under>>,
    pub xi_under: Vec<R::Under>,
    pub nu: Vec<R::Fixed>,
}

impl<R: GreenFunctor + ?Sized> Images<'_, R> {
    /// The image `∏ ξᵢ^{aᵢ} conj(ξᵢ)^{bᵢ}` of an underlying monomial.
    pub fn under_monomial(&self, m: &UMono) -> R::Under {
        let r = self.target;
        let mut acc = r.under_one();
        for (i, u) in self.xi_under.iter().enumerate() {
            if m.x[i] > 0 {
                acc = r.under_mul(&acc, &r.under_pow(u, m.x[i]));
            }
            if m.xbar[i] > 0 {
                acc = r.under_mul(&acc, &r.under_pow(&r.conj(u), m.xbar[i]));
            }
        }
        acc
    }

    fn fixed_gen_power(&self, exps: &[u32]) -> R::Fixed {
        let r = self.target;
        let mut acc = r.fixed_one();
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                let Value::Fixed(a) = &self.xi[i] else { unreachable!("checked on construction") };
                acc = r.fixed_mul(&acc, &r.fixed_pow(a, e));
            }
        }
        acc
    }

    fn nu_power(&self, exps: &[u32]) -> R::Fixed {
        let r = self.target;
        let mut acc = r.fixed_one();
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                acc = r.fixed_mul(&acc, &r.fixed_pow(&self.nu[i], e));
            }
        }
        acc
    }
}

impl FreeObject for FreeGreenFixed {
    type FixedBasis = GfBasis;
    fn generator_level(&self) -> Level {
        Level::Fixed
    }
    fn generators(&self) -> usize {
        1
    }
    fn has_norm_classes(&self) -> bool {
        false
    }
    fn fixed_basis_image<R: GreenFunctor + ?Sized>(&self, b: &GfBasis, im: &Images<'_, R>) -> R::Fixed {
        let m = im.fixed_gen_power(&[b.deg]);
        if b.t {
            im.target.tr(&im.target.res(&m))
        } else {
            m
        }
    }
}

impl FreeObject for FreeGreenUnderlying {
    type FixedBasis = GuBasis;
    fn generator_level(&self) -> Level {
        Level::Underlying
    }
    fn generators(&self) -> usize {
        1
    }
    fn has_norm_classes(&self) -> bool {
        false
    }
    fn fixed_basis_image<R: GreenFunctor + ?Sized>(&self, b: &GuBasis, im: &Images<'_, R>) -> R::Fixed {
        match b.t {
            None => im.target.fixed_one(),
            Some((i, j)) => im.target.tr(&im.under_monomial(&UMono::single(i, j))),
        }
    }
}

impl FreeObject for FreeTambaraFixed {
    type FixedBasis = TfBasis;
    fn generator_level(&self) -> Level {
        Level::Fixed
    }
    fn generators(&self) -> usize {
        self.gens()
    }
    fn has_norm_classes(&self) -> bool {
        true
    }
    fn fixed_basis_image<R: GreenFunctor + ?Sized>(&self, b: &TfBasis, im: &Images<'_, R>) -> R::Fixed {
        let r = im.target;
        let m = r.fixed_mul(&im.fixed_gen_power(&b.x), &im.nu_power(&b.n));
        if b.t {
            r.tr(&r.res(&m))
        } else {
            m
        }
    }
}

impl FreeObject for FreeTambaraUnderlying {
    type FixedBasis = TuBasis;
    fn generator_level(&self) -> Level {
        Level::Underlying
    }
    fn generators(&self) -> usize {
        self.gens()
    }
    fn has_norm_classes(&self) -> bool {
        true
    }
    fn fixed_basis_image<R: GreenFunctor + ?Sized>(&self, b: &TuBasis, im: &Images<'_, R>) -> R::Fixed {
        let r = im.target;
        let norms = im.nu_power(&b.n);
        if b.t {
            r.fixed_mul(&norms, &r.tr(&im.under_monomial(&b.m)))
        } else {
            norms
        }
    }
}

/// The Green functor map out of a free object fixed by generator images.
pub struct GreenHom<'a, S: FreeObject, R: GreenFunctor + ?Sized> {
    source: &'a S,
    images: Images<'a, R>,
}

impl<'a, S: FreeObject, R: GreenFunctor + ?Sized> GreenHom<'a, S, R> {
    pub fn source(&self) -> &S {
        self.source
    }

    pub fn target(&self) -> &R {
        self.images.target
    }

    pub fn fixed(&self, a: &S::Fixed) -> R::Fixed {
        let r = self.images.target;
        a.fold_linear(
            r.fixed_zero(),
            |b| self.source.fixed_basis_image(b, &self.images),
            |x, y| r.fixed_add(x, y),
            |k, v| r.fixed_mul(&r.fixed_int(k), v),
        )
    }

    pub fn under(&self, u: &S::Under) -> R::Under {
        let r = self.images.target;
        u.fold_linear(
            r.under_zero(),
            |m| self.images.under_monomial(m),
            |x, y| r.under_add(x, y),
            |k, v| r.under_mul(&r.under_int(k), v),
        )
    }
}

/// Build the homomorphism out of `source` sending the generators to `xi`
/// and (for free Tambara sources) the norm classes to `nu`.
pub fn green_hom_extend<'a, S: FreeObject, R: GreenFunctor + ?Sized>(
    source: &'a S,
    target: &'a R,
    xi: Vec<Value<R::Fixed, R::Under>>,
    nu: Option<Vec<R::Fixed>>,
) -> Result<GreenHom<'a, S, R>, HomError> {
    let k = source.generators();
    if xi.len() != k {
        return Err(HomError::GeneratorCount { expected: k, found: xi.len() });
    }
    let level = source.generator_level();
    for (index, v) in xi.iter().enumerate() {
        if v.level() != level {
            return Err(HomError::WrongLevel { index, expected: level, found: v.level() });
        }
    }
    let xi_under: Vec<R::Under> = xi
        .iter()
        .map(|v| match v {
            Value::Fixed(a) => target.res(a),
            Value::Underlying(u) => u.clone(),
        })
        .collect();
    let nu = match (source.has_norm_classes(), nu) {
        (true, None) => return Err(HomError::MissingNormImages),
        (false, Some(_)) => return Err(HomError::UnexpectedNormImages),
        (false, None) => Vec::new(),
        (true, Some(nu)) => {
            if nu.len() != k {
                return Err(HomError::GeneratorCount { expected: k, found: nu.len() });
            }
            for (index, (n, u)) in nu.iter().zip(&xi_under).enumerate() {
                let lhs = target.res(n);
                let (rhs, condition) = match level {
                    Level::Fixed => (target.under_mul(u, u), "res(ν) = res(ξ)²"),
                    Level::Underlying => (target.under_mul(u, &target.conj(u)), "res(ν) = ξ·conj(ξ)"),
                };
                if lhs != rhs {
                    return Err(HomError::Incompatible {
                        index,
                        condition,
                        detail: format!("{} vs {}", target.show_under(&lhs), target.show_under(&rhs)),
                    });
                }
            }
            nu
        }
    };
    Ok(GreenHom { source, images: Images { target, xi, xi_under, nu } })
}

/// Check that the map out of the free Tambara functor classifying `s`
/// (`x ↦ s`, `n ↦ N(res s)` or `N(s)`) commutes with every operation on
/// basis elements of degree at most `degree_bound`.
pub fn yoneda_check<R: TambaraFunctor + ?Sized>(
    target: &R,
    s: &Value<R::Fixed, R::Under>,
    degree_bound: u32,
) -> Report {
    match s {
        Value::Fixed(a) => {
            let src = FreeTambaraFixed::new();
            let nu = target.norm(&target.res(a));
            let hom = green_hom_extend(&src, target, vec![s.clone()], Some(vec![nu]))
                .expect("N(res s) restricts to res(s)² in a Tambara functor");
            let fixed: Vec<_> = FreeTambaraFixed::basis(degree_bound).into_iter().map(LinComb::monomial).collect();
            let under: Vec<_> =
                FreeTambaraFixed::under_basis(degree_bound).into_iter().map(LinComb::monomial).collect();
            check_hom(&src, &hom, &fixed, &under)
        }
        Value::Underlying(u) => {
            let src = FreeTambaraUnderlying::new();
            let nu = target.norm(u);
            let hom = match green_hom_extend(&src, target, vec![s.clone()], Some(vec![nu])) {
                Ok(h) => h,
                Err(e) => {
                    let mut report = Report::default();
                    report.record("res(N s) = s·conj(s)", false, || e.to_string());
                    return report.finish();
                }
            };
            let fixed: Vec<_> = FreeTambaraUnderlying::basis(degree_bound).into_iter().map(LinComb::monomial).collect();
            let under: Vec<_> =
                FreeTambaraUnderlying::under_basis(degree_bound).into_iter().map(LinComb::monomial).collect();
            check_hom(&src, &hom, &fixed, &under)
        }
    }
}

/// Verify a map out of a free Tambara functor against every operation on
/// the given fixed and underlying test elements (and their pairwise sums).
pub fn check_hom<S, R>(src: &S, hom: &GreenHom<'_, S, R>, fixed: &[S::Fixed], under: &[S::Under]) -> Report
where
    S: FreeObject + TambaraFunctor,
    R: TambaraFunctor + ?Sized,
{
    let r = hom.target();
    let mut report = Report::default();
    let sf = |a: &S::Fixed| src.show_fixed(a);
    let su = |u: &S::Under| src.show_under(u);

    report.record("φ(1) = 1", hom.fixed(&src.fixed_one()) == r.fixed_one(), || "fixed".into());
    report.record("φ(1) = 1", hom.under(&src.under_one()) == r.under_one(), || "underlying".into());
    for a in fixed {
        report
            .record("φ(res a) = res φ(a)", hom.under(&src.res(a)) == r.res(&hom.fixed(a)), || format!("a={}", sf(a)));
    }
    for u in under {
        let w = || format!("u={}", su(u));
        report.record("φ(tr u) = tr φ(u)", hom.fixed(&src.tr(u)) == r.tr(&hom.under(u)), w);
        report.record("φ(conj u) = conj φ(u)", hom.under(&src.conj(u)) == r.conj(&hom.under(u)), w);
        let lhs = hom.fixed(&src.norm(u));
        let rhs = r.norm(&hom.under(u));
        report.record("φ(N u) = N φ(u)", lhs == rhs, || {
            format!("u={}: {} vs {}", su(u), r.show_fixed(&lhs), r.show_fixed(&rhs))
        });
    }
    for a in fixed {
        for b in fixed {
            let w = || format!("a={}, b={}", sf(a), sf(b));
            report.record(
                "φ(a+b) = φ(a)+φ(b)",
                hom.fixed(&src.fixed_add(a, b)) == r.fixed_add(&hom.fixed(a), &hom.fixed(b)),
                w,
            );
            report.record(
                "φ(a·b) = φ(a)·φ(b)",
                hom.fixed(&src.fixed_mul(a, b)) == r.fixed_mul(&hom.fixed(a), &hom.fixed(b)),
                w,
            );
        }
    }
    for u in under {
        for v in under {
            let w = || format!("u={}, v={}", su(u), su(v));
            report.record(
                "φ(u+v) = φ(u)+φ(v)",
                hom.under(&src.under_add(u, v)) == r.under_add(&hom.under(u), &hom.under(v)),
                w,
            );
            report.record(
                "φ(u·v) = φ(u)·φ(v)",
                hom.under(&src.under_mul(u, v)) == r.under_mul(&hom.under(u), &hom.under(v)),
                w,
            );
            for sum in [src.under_add(u, v), src.under_sub(u, v)] {
                let lhs = hom.fixed(&src.norm(&sum));
                let rhs = r.norm(&hom.under(&sum));
                report.record("φ(N(u±v)) = N φ(u±v)", lhs == rhs, || {
                    format!("u={}, v={}: {} vs {}", su(u), su(v), r.show_fixed(&lhs), r.show_fixed(&rhs))
                });
            }
        }
    }
    report.finish()
}
