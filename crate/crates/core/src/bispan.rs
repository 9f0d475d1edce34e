//! Bispans `S ←f U →g V →h T` of finite C2-sets: the morphisms of the
//! polynomial category whose product-preserving functors are (incomplete)
//! Tambara functors.
//!
//! A bispan up to isomorphism decomposes over the orbits of `V`. Each
//! `V`-orbit contributes a [`Block`] recording where it lands in `T` and
//! where the `U`-orbits above it land in `S`, normalized so that isomorphic
//! orbit diagrams give equal blocks. The sorted multiset of blocks is a
//! complete invariant, and the stored maps are rebuilt from it, so two
//! [`Bispan`] values are isomorphic exactly when they are equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::functor::{GreenFunctor, NormFn, TambaraFunctor};
use crate::gset::{exponential_diagram, is_member, pullback, GMap, GSet, GSetError, IndexingSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BispanError {
    #[error(transparent)]
    GSet(#[from] GSetError),
    #[error("middle map is not in the {0:?} indexing system")]
    NotInIndexingSystem(IndexingSystem),
    #[error("indexing systems differ: {0:?} vs {1:?}")]
    IndexingMismatch(IndexingSystem, IndexingSystem),
    #[error("bispans are not composable: target {0} vs source {1}")]
    NotComposable(GSet, GSet),
    #[error("input has {found_fixed} fixed and {found_free} free entries, expected {expected}")]
    InputShape { expected: GSet, found_fixed: usize, found_free: usize },
    #[error("bispans in the complete indexing system need a norm; evaluate into a Tambara functor")]
    NeedsNorm,
}

/// The contribution of one `V`-orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// A fixed point `v` with `h(v) = target`. `fixed_legs` are `f(u)` for
    /// the fixed points `u` over `v`; `free_legs` hold, for each free
    /// `U`-orbit `{u, γu}` over `v`, the smaller of `f(u)` and `f(γu)`.
    Fixed { target: usize, fixed_legs: Vec<usize>, free_legs: Vec<usize> },
    /// A free orbit `{v, γv}`: `h(v)` and the sorted `f(u)` over `g(u) = v`,
    /// for whichever of `v, γv` gives the smaller pair.
    Free { target: usize, legs: Vec<usize> },
}

/// An isomorphism class of bispans, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bispan {
    s: GSet,
    t: GSet,
    indexing: IndexingSystem,
    blocks: Vec<Block>,
    f: GMap,
    g: GMap,
    h: GMap,
}

impl Bispan {
    /// The class of `S ←f U →g V →h T`.
    pub fn new(f: GMap, g: GMap, h: GMap, indexing: IndexingSystem) -> Result<Bispan, BispanError> {
        if f.source() != g.source() {
            return Err(GSetError::NotComposable(g.source(), f.source()).into());
        }
        if g.target() != h.source() {
            return Err(GSetError::NotComposable(g.target(), h.source()).into());
        }
        if !is_member(&g, indexing) {
            return Err(BispanError::NotInIndexingSystem(indexing));
        }
        let (s, t) = (f.target(), h.target());
        Ok(Bispan::from_blocks(s, t, indexing, blocks_of(&f, &g, &h)))
    }

    fn from_blocks(s: GSet, t: GSet, indexing: IndexingSystem, mut blocks: Vec<Block>) -> Bispan {
        blocks.sort();
        let (f, g, h) = materialize(s, t, &blocks);
        Bispan { s, t, indexing, blocks, f, g, h }
    }

    /// `R_f = [T ←f S = S = S]`, a morphism `T → S`.
    pub fn restriction(f: &GMap, indexing: IndexingSystem) -> Bispan {
        let s = f.source();
        Bispan::new(f.clone(), GMap::identity(s), GMap::identity(s), indexing).expect("identity is in every system")
    }

    /// `N_f = [S = S →f T = T]`, a morphism `S → T`.
    pub fn norm(f: &GMap, indexing: IndexingSystem) -> Result<Bispan, BispanError> {
        Bispan::new(GMap::identity(f.source()), f.clone(), GMap::identity(f.target()), indexing)
    }

    /// `T_f = [S = S = S →f T]`, a morphism `S → T`.
    pub fn transfer(f: &GMap, indexing: IndexingSystem) -> Bispan {
        let s = f.source();
        Bispan::new(GMap::identity(s), GMap::identity(s), f.clone(), indexing).expect("identity is in every system")
    }

    pub fn identity(s: GSet, indexing: IndexingSystem) -> Bispan {
        Bispan::restriction(&GMap::identity(s), indexing)
    }

    /// The bispan `∅ → ∅`.
    pub fn empty(indexing: IndexingSystem) -> Bispan {
        Bispan::identity(GSet::EMPTY, indexing)
    }

    pub fn source(&self) -> GSet {
        self.s
    }

    pub fn target(&self) -> GSet {
        self.t
    }

    pub fn u(&self) -> GSet {
        self.f.source()
    }

    pub fn v(&self) -> GSet {
        self.h.source()
    }

    pub fn f(&self) -> &GMap {
        &self.f
    }

    pub fn g(&self) -> &GMap {
        &self.g
    }

    pub fn h(&self) -> &GMap {
        &self.h
    }

    pub fn indexing(&self) -> IndexingSystem {
        self.indexing
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Whether any norm along a free-to-fixed orbit map is involved.
    pub fn uses_norms(&self) -> bool {
        self.blocks.iter().any(|b| matches!(b, Block::Fixed { free_legs, .. } if !free_legs.is_empty()))
    }

    /// `self ∘ p`: first `p: S → T`, then `self: T → W`.
    pub fn after(&self, p: &Bispan) -> Result<Bispan, BispanError> {
        compose(self, p)
    }

    /// The same class in another indexing system.
    pub fn with_indexing(&self, indexing: IndexingSystem) -> Result<Bispan, BispanError> {
        Bispan::new(self.f.clone(), self.g.clone(), self.h.clone(), indexing)
    }
}

/// Iso-class equality.
pub fn equals(p: &Bispan, q: &Bispan) -> bool {
    p == q
}

fn blocks_of(f: &GMap, g: &GMap, h: &GMap) -> Vec<Block> {
    let (s, u, v) = (f.target(), f.source(), g.target());
    let mut blocks = Vec::new();
    for p in v.points() {
        let fiber = g.fiber(p);
        if v.is_fixed(p) {
            let mut fixed_legs: Vec<usize> = fiber.iter().filter(|&&q| u.is_fixed(q)).map(|&q| f.apply(q)).collect();
            let mut free_legs: Vec<usize> = fiber
                .iter()
                .filter(|&&q| !u.is_fixed(q) && u.orbit_rep(q) == q)
                .map(|&q| f.apply(q).min(s.act(f.apply(q))))
                .collect();
            fixed_legs.sort();
            free_legs.sort();
            blocks.push(Block::Fixed { target: h.apply(p), fixed_legs, free_legs });
        } else if v.orbit_rep(p) == p {
            let side = |q: usize| {
                let mut legs: Vec<usize> = g.fiber(q).into_iter().map(|w| f.apply(w)).collect();
                legs.sort();
                (h.apply(q), legs)
            };
            let (target, legs) = side(p).min(side(v.act(p)));
            blocks.push(Block::Free { target, legs });
        }
    }
    blocks
}

fn materialize(s: GSet, t: GSet, blocks: &[Block]) -> (GMap, GMap, GMap) {
    let mut u_fixed_f = Vec::new();
    let mut u_fixed_g = Vec::new();
    let mut u_free_f = Vec::new();
    let mut u_free_g = Vec::new();
    let mut v_fixed_h = Vec::new();
    let mut v_free_h = Vec::new();
    let v_fixed = blocks.iter().filter(|b| matches!(b, Block::Fixed { .. })).count();
    let v_set = GSet::new(v_fixed, blocks.len() - v_fixed);
    for b in blocks {
        match b {
            Block::Fixed { target, fixed_legs, free_legs } => {
                let vi = v_fixed_h.len();
                v_fixed_h.push(*target);
                for &l in fixed_legs {
                    u_fixed_f.push(l);
                    u_fixed_g.push(vi);
                }
                for &l in free_legs {
                    u_free_f.push(l);
                    u_free_g.push(vi);
                }
            }
            Block::Free { target, legs } => {
                let v0 = v_set.free_point(v_free_h.len(), 0);
                v_free_h.push(*target);
                for &l in legs {
                    u_free_f.push(l);
                    u_free_g.push(v0);
                }
            }
        }
    }
    let u_set = GSet::new(u_fixed_f.len(), u_free_f.len());
    let f = GMap::from_orbit_images(u_set, s, &u_fixed_f, &u_free_f).expect("blocks record equivariant legs");
    let g = GMap::from_orbit_images(u_set, v_set, &u_fixed_g, &u_free_g).expect("blocks record equivariant legs");
    let h = GMap::from_orbit_images(v_set, t, &v_fixed_h, &v_free_h).expect("blocks record equivariant legs");
    (f, g, h)
}

/// `q ∘ p` for `p: S → T` and `q: T → W`.
///
/// Writing both as `T∘N∘R`, the middle `R_{f₂}∘T_{h₁}` and the resulting
/// `R∘N` are commuted with pullbacks, `N_{g₂}∘T` is rewritten with an
/// exponential diagram, one more `R∘N` is commuted, and adjacent maps of the
/// same kind are merged.
pub fn compose(q: &Bispan, p: &Bispan) -> Result<Bispan, BispanError> {
    if p.indexing != q.indexing {
        return Err(BispanError::IndexingMismatch(p.indexing, q.indexing));
    }
    if p.t != q.s {
        return Err(BispanError::NotComposable(p.t, q.s));
    }
    let (f1, g1, h1) = (&p.f, &p.g, &p.h);
    let (f2, g2, h2) = (&q.f, &q.g, &q.h);
    // R_{f2} T_{h1} = T_{b1} R_{a1}
    let pb1 = pullback(h1, f2)?;
    let (a1, b1) = (&pb1.first, &pb1.second);
    // R_{a1} N_{g1} = N_{b2} R_{a2}
    let pb2 = pullback(g1, a1)?;
    let (a2, b2) = (&pb2.first, &pb2.second);
    // N_{g2} T_{b1} = T_{h'} N_{g'} R_{f'}
    let exp = exponential_diagram(g2, b1)?;
    // R_{f'} N_{b2} = N_{b3} R_{a3}
    let pb3 = pullback(b2, &exp.f_prime)?;
    let (a3, b3) = (&pb3.first, &pb3.second);

    let f = f1.after(&a2.after(a3)?)?;
    let g = exp.g_prime.after(b3)?;
    let h = h2.after(&exp.h_prime)?;
    Bispan::new(f, g, h, p.indexing)
}

/// The componentwise disjoint union `S ⊔ S' → T ⊔ T'`.
pub fn product(p: &Bispan, q: &Bispan) -> Result<Bispan, BispanError> {
    if p.indexing != q.indexing {
        return Err(BispanError::IndexingMismatch(p.indexing, q.indexing));
    }
    Bispan::new(p.f.sum(&q.f), p.g.sum(&q.g), p.h.sum(&q.h), p.indexing)
}

impl fmt::Display for Bispan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} ← {} → {} → {}]", self.s, self.u(), self.v(), self.t)
    }
}

#[derive(Serialize, Deserialize)]
struct BispanJson {
    #[serde(rename = "S")]
    s: GSet,
    #[serde(rename = "U")]
    u: GSet,
    #[serde(rename = "V")]
    v: GSet,
    #[serde(rename = "T")]
    t: GSet,
    f: serde_json::Value,
    g: serde_json::Value,
    h: serde_json::Value,
    indexing: IndexingSystem,
}

impl Serialize for Bispan {
    fn serialize<Z: Serializer>(&self, ser: Z) -> Result<Z::Ok, Z::Error> {
        let to = |m: &GMap| serde_json::to_value(m).expect("serializable");
        BispanJson {
            s: self.s,
            u: self.u(),
            v: self.v(),
            t: self.t,
            f: to(&self.f),
            g: to(&self.g),
            h: to(&self.h),
            indexing: self.indexing,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Bispan {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = BispanJson::deserialize(de)?;
        let map = |name: &str, v: serde_json::Value, src: GSet, tgt: GSet| -> Result<GMap, D::Error> {
            let m: GMap = serde_json::from_value(v).map_err(|e| D::Error::custom(format!("{name}: {e}")))?;
            if m.source() != src || m.target() != tgt {
                return Err(D::Error::custom(format!(
                    "{name}: expected {src} → {tgt}, got {} → {}",
                    m.source(),
                    m.target()
                )));
            }
            Ok(m)
        };
        let f = map("f", raw.f, raw.u, raw.s)?;
        let g = map("g", raw.g, raw.u, raw.v)?;
        let h = map("h", raw.h, raw.v, raw.t)?;
        Bispan::new(f, g, h, raw.indexing).map_err(D::Error::custom)
    }
}

/// Values over a C2-set: one fixed-level element per fixed point and one
/// underlying element per free orbit (the value at `oj.0`; the value at
/// `oj.1` is its conjugate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementTuple<F, U> {
    pub fixed: Vec<F>,
    pub free: Vec<U>,
}

impl<F, U> ElementTuple<F, U> {
    pub fn fits(&self, set: GSet) -> bool {
        self.fixed.len() == set.fixed_count() && self.free.len() == set.free_orbit_count()
    }
}

/// Value at an arbitrary free point `p` of `set`.
fn free_value<R: GreenFunctor + ?Sized>(r: &R, set: GSet, free: &[R::Under], p: usize) -> R::Under {
    let (j, side) = set.orbit_of(p).expect("free point");
    if side == 0 {
        free[j].clone()
    } else {
        r.conj(&free[j])
    }
}

fn evaluate_with<R: GreenFunctor + ?Sized>(
    p: &Bispan,
    r: &R,
    input: &ElementTuple<R::Fixed, R::Under>,
    norm: Option<NormFn<'_, R>>,
) -> Result<ElementTuple<R::Fixed, R::Under>, BispanError> {
    if !input.fits(p.s) {
        return Err(BispanError::InputShape {
            expected: p.s,
            found_fixed: input.fixed.len(),
            found_free: input.free.len(),
        });
    }
    let (s, u, v, t) = (p.s, p.u(), p.v(), p.t);
    let (f, g, h) = (&p.f, &p.g, &p.h);

    // Restriction along f.
    let ufixed: Vec<R::Fixed> = (0..u.fixed_count()).map(|q| input.fixed[f.apply(q)].clone()).collect();
    let ufree: Vec<R::Under> = (0..u.free_orbit_count())
        .map(|j| {
            let img = f.apply(u.free_point(j, 0));
            if s.is_fixed(img) {
                r.res(&input.fixed[img])
            } else {
                free_value(r, s, &input.free, img)
            }
        })
        .collect();

    // Norms and products along g.
    let vfixed = (0..v.fixed_count())
        .map(|q| {
            let mut acc = r.fixed_one();
            for w in g.fiber(q) {
                if u.is_fixed(w) {
                    acc = r.fixed_mul(&acc, &ufixed[w]);
                } else if u.orbit_rep(w) == w {
                    let n = norm.ok_or(BispanError::NeedsNorm)?;
                    acc = r.fixed_mul(&acc, &n(&free_value(r, u, &ufree, w)));
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, BispanError>>()?;
    let vfree: Vec<R::Under> = (0..v.free_orbit_count())
        .map(|j| {
            g.fiber(v.free_point(j, 0))
                .into_iter()
                .fold(r.under_one(), |acc, w| r.under_mul(&acc, &free_value(r, u, &ufree, w)))
        })
        .collect();

    // Sums and transfers along h.
    let mut tfixed = vec![r.fixed_zero(); t.fixed_count()];
    let mut tfree = vec![r.under_zero(); t.free_orbit_count()];
    for q in v.points() {
        let target = h.apply(q);
        if v.is_fixed(q) {
            tfixed[target] = r.fixed_add(&tfixed[target], &vfixed[q]);
        } else if t.is_fixed(target) {
            if v.orbit_rep(q) == q {
                tfixed[target] = r.fixed_add(&tfixed[target], &r.tr(&free_value(r, v, &vfree, q)));
            }
        } else if let Some((j, 0)) = t.orbit_of(target) {
            tfree[j] = r.under_add(&tfree[j], &free_value(r, v, &vfree, q));
        }
    }
    Ok(ElementTuple { fixed: tfixed, free: tfree })
}

/// Evaluate into a Green functor. Only bispans of the trivial indexing
/// system can be evaluated without a norm.
pub fn evaluate_green<R: GreenFunctor + ?Sized>(
    p: &Bispan,
    r: &R,
    input: &ElementTuple<R::Fixed, R::Under>,
) -> Result<ElementTuple<R::Fixed, R::Under>, BispanError> {
    if p.indexing == IndexingSystem::Complete {
        return Err(BispanError::NeedsNorm);
    }
    evaluate_with(p, r, input, None)
}

/// Evaluate into a Tambara functor.
pub fn evaluate<R: TambaraFunctor + ?Sized>(
    p: &Bispan,
    r: &R,
    input: &ElementTuple<R::Fixed, R::Under>,
) -> Result<ElementTuple<R::Fixed, R::Under>, BispanError> {
    evaluate_with(p, r, input, Some(&|x: &R::Under| r.norm(x)))
}

/// Evaluate with an optional norm supplied as a closure; bispans that
/// use norms fail with [`BispanError::NeedsNorm`] when it is absent.
pub fn evaluate_with_norm<R: GreenFunctor + ?Sized>(
    p: &Bispan,
    r: &R,
    input: &ElementTuple<R::Fixed, R::Under>,
    norm: Option<NormFn<'_, R>>,
) -> Result<ElementTuple<R::Fixed, R::Under>, BispanError> {
    match norm {
        Some(n) => evaluate_with(p, r, input, Some(n)),
        None => evaluate_green(p, r, input),
    }
}

/// An integer combination of bispans with a common source and target.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<Bispan, BigInt>,
}

impl FormalSum {
    pub fn new() -> Self {
        FormalSum::default()
    }

    pub fn single(p: Bispan) -> Self {
        let mut s = FormalSum::new();
        s.add_term(p, BigInt::from(1));
        s
    }

    pub fn add_term(&mut self, p: Bispan, c: BigInt) {
        if let Some((q, _)) = self.terms.iter().next() {
            assert!(q.s == p.s && q.t == p.t, "terms of a formal sum share source and target");
        }
        let slot = self.terms.entry(p.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bispan, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c·P(input)`, computed levelwise.
    pub fn evaluate<R: TambaraFunctor + ?Sized>(
        &self,
        r: &R,
        input: &ElementTuple<R::Fixed, R::Under>,
        target: GSet,
    ) -> Result<ElementTuple<R::Fixed, R::Under>, BispanError> {
        let mut out = ElementTuple {
            fixed: vec![r.fixed_zero(); target.fixed_count()],
            free: vec![r.under_zero(); target.free_orbit_count()],
        };
        for (p, c) in &self.terms {
            let v = evaluate(p, r, input)?;
            for (o, x) in out.fixed.iter_mut().zip(&v.fixed) {
                *o = r.fixed_add(o, &r.fixed_mul(&r.fixed_int(c), x));
            }
            for (o, x) in out.free.iter_mut().zip(&v.free) {
                *o = r.under_add(o, &r.under_mul(&r.under_int(c), x));
            }
        }
        Ok(out)
    }
}

/// A random C2-set with at most `max_points` points.
pub fn random_gset<G: Rng + ?Sized>(rng: &mut G, max_points: usize) -> GSet {
    let choices: Vec<GSet> = (0..=max_points)
        .flat_map(|fixed| (0..=(max_points - fixed) / 2).map(move |free| GSet::new(fixed, free)))
        .collect();
    *choices.choose(rng).expect("nonempty")
}

/// A uniformly chosen equivariant map, if any exists.
pub fn random_map<G: Rng + ?Sized>(rng: &mut G, source: GSet, target: GSet) -> Option<GMap> {
    GMap::all(source, target).choose(rng).cloned()
}

/// A random bispan `s → t` whose middle sets have at most `max_points`
/// points. Retries until the random maps exist and the middle map lies in
/// the indexing system.
pub fn random_bispan<G: Rng + ?Sized>(
    rng: &mut G,
    s: GSet,
    t: GSet,
    indexing: IndexingSystem,
    max_points: usize,
) -> Bispan {
    loop {
        let u = random_gset(rng, max_points);
        let v = random_gset(rng, max_points);
        let (Some(f), Some(h)) = (random_map(rng, u, s), random_map(rng, v, t)) else { continue };
        let candidates: Vec<GMap> = GMap::all(u, v).into_iter().filter(|g| is_member(g, indexing)).collect();
        let Some(g) = candidates.choose(rng).cloned() else { continue };
        return Bispan::new(f, g, h, indexing).expect("valid by construction");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{Burnside, BurnsideElement};
    use crate::gset::fold;
    use IndexingSystem::{Complete, Trivial};

    fn c2() -> GSet {
        GSet::free_orbit()
    }

    fn pt() -> GSet {
        GSet::point()
    }

    fn fixed_input(a: BurnsideElement) -> ElementTuple<BurnsideElement, BigInt> {
        ElementTuple { fixed: vec![a], free: vec![] }
    }

    #[test]
    fn generators() {
        let q = GMap::quotient();
        let t = Bispan::transfer(&q, Complete);
        assert_eq!((t.source(), t.u(), t.v(), t.target()), (c2(), c2(), c2(), pt()));
        assert_eq!(Bispan::restriction(&GMap::identity(c2()), Trivial), Bispan::identity(c2(), Trivial));
        let n = Bispan::norm(&fold(c2(), 2), Trivial).unwrap();
        assert_eq!((n.source(), n.u(), n.v(), n.target()), (GSet::new(0, 2), GSet::new(0, 2), c2(), c2()));
        assert!(matches!(Bispan::norm(&q, Trivial), Err(BispanError::NotInIndexingSystem(_))));
    }

    #[test]
    fn iso_class_equality() {
        // [∗ ← C2 →1 C2 → ∗] ≅ [∗ ← C2 →γ C2 → ∗]
        let to_pt = GMap::quotient();
        let a = Bispan::new(to_pt.clone(), GMap::identity(c2()), to_pt.clone(), Trivial).unwrap();
        let b = Bispan::new(to_pt.clone(), GMap::gamma(), to_pt, Trivial).unwrap();
        assert_eq!(a, b);
        // x and x̄ differ: [C2 ←1 C2 →1 C2 →1 C2] vs [C2 ←1 C2 →γ C2 →1 C2]
        let id = GMap::identity(c2());
        let x = Bispan::new(id.clone(), id.clone(), id.clone(), Trivial).unwrap();
        let xbar = Bispan::new(id.clone(), GMap::gamma(), id, Trivial).unwrap();
        assert_ne!(x, xbar);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let q = GMap::quotient();
        let p = Bispan::norm(&q, Complete).unwrap();
        let again = Bispan::new(p.f().clone(), p.g().clone(), p.h().clone(), Complete).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn norm_of_transfer_evaluates_to_norm_of_sum() {
        let n = Bispan::norm(&GMap::quotient(), Complete).unwrap();
        let t = Bispan::transfer(&fold(c2(), 2), Complete);
        let composite = compose(&n, &t).unwrap();
        let input = ElementTuple { fixed: vec![], free: vec![BigInt::from(1), BigInt::from(1)] };
        let out = evaluate(&composite, &Burnside, &input).unwrap();
        assert_eq!(out.fixed, vec![BurnsideElement::new(2, 1)]);
        assert_eq!(out, evaluate(&n, &Burnside, &evaluate(&t, &Burnside, &input).unwrap()).unwrap());
    }

    #[test]
    fn restriction_after_transfer() {
        let q = GMap::quotient();
        let p = compose(&Bispan::restriction(&q, Complete), &Bispan::transfer(&q, Complete)).unwrap();
        let input = ElementTuple { fixed: vec![], free: vec![BigInt::from(5)] };
        assert_eq!(evaluate(&p, &Burnside, &input).unwrap().free, vec![BigInt::from(10)]);
    }

    #[test]
    fn evaluation_examples() {
        // [∗ ← C2 → ∗ → ∗] is N∘res.
        let q = GMap::quotient();
        let p = Bispan::new(q.clone(), q, GMap::identity(pt()), Complete).unwrap();
        let one = BurnsideElement::new(1, 0);
        assert_eq!(evaluate(&p, &Burnside, &fixed_input(one.clone())).unwrap().fixed, vec![one]);
        let out = evaluate(&p, &Burnside, &fixed_input(BurnsideElement::t())).unwrap();
        assert_eq!(out.fixed, vec![BurnsideElement::new(2, 1)]);
        assert!(matches!(
            evaluate_green(&p, &Burnside, &fixed_input(BurnsideElement::t())),
            Err(BispanError::NeedsNorm)
        ));

        let t = Bispan::transfer(&GMap::quotient(), Complete);
        let out = evaluate(&t, &Burnside, &ElementTuple { fixed: vec![], free: vec![BigInt::from(1)] }).unwrap();
        assert_eq!(out.fixed, vec![BurnsideElement::t()]);
    }

    #[test]
    fn identity_laws_and_products() {
        let q = GMap::quotient();
        let p = Bispan::norm(&q, Complete).unwrap();
        assert_eq!(compose(&Bispan::identity(pt(), Complete), &p).unwrap(), p);
        assert_eq!(compose(&p, &Bispan::identity(c2(), Complete)).unwrap(), p);
        let id = Bispan::identity(pt(), Complete);
        assert_eq!(product(&id, &id).unwrap(), Bispan::identity(GSet::new(2, 0), Complete));
        assert_eq!(product(&p, &Bispan::empty(Complete)).unwrap(), p);
        let two = product(&Bispan::transfer(&q, Complete), &p).unwrap();
        assert_eq!((two.source(), two.target(), two.blocks().len()), (GSet::new(0, 2), GSet::new(2, 0), 2));
    }

    #[test]
    fn json_round_trip() {
        let p = Bispan::norm(&fold(c2(), 2), Trivial).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let back: Bispan = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn random_bispans_respect_the_indexing_system() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = random_bispan(&mut rng, GSet::new(1, 1), GSet::new(1, 0), Trivial, 4);
            assert!(is_member(p.g(), Trivial));
            assert!(!p.uses_norms());
        }
    }
}
