//! Finite C2-sets and equivariant maps.
//!
//! A [`GSet`] is determined up to isomorphism by its number of fixed points
//! and free orbits, so every set is stored in a canonical labeling: fixed
//! points `f0..f(a-1)` come first (indices `0..a`), followed by the free
//! orbits, orbit `j` occupying indices `a + 2j` (`oj.0`) and `a + 2j + 1`
//! (`oj.1`). The generator of C2 swaps the two points of every free orbit.
//!
//! Constructions (pullbacks, coproducts, dependent products) are computed at
//! point level and relabeled into this canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GSetError {
    #[error("maps do not share a target: {0} vs {1}")]
    TargetMismatch(GSet, GSet),
    #[error("maps are not composable: target {0} vs source {1}")]
    NotComposable(GSet, GSet),
    #[error("assignment has {found} entries but the source has {expected} points")]
    WrongLength { expected: usize, found: usize },
    #[error("point {0} is out of range for {1}")]
    OutOfRange(usize, GSet),
    #[error("assignment is not equivariant at point {0}")]
    NotEquivariant(String),
    #[error("unknown point name `{0}`")]
    BadPointName(String),
    #[error("no image given for point `{0}`")]
    MissingImage(String),
}

/// A finite C2-set in canonical form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GSet {
    #[serde(rename = "fixed")]
    fixed_count: usize,
    #[serde(rename = "free")]
    free_orbit_count: usize,
}

impl GSet {
    pub const EMPTY: GSet = GSet::new(0, 0);

    pub const fn new(fixed_count: usize, free_orbit_count: usize) -> Self {
        GSet { fixed_count, free_orbit_count }
    }

    /// The one-point orbit `C2/C2`.
    pub const fn point() -> Self {
        GSet::new(1, 0)
    }

    /// The free orbit `C2/e`.
    pub const fn free_orbit() -> Self {
        GSet::new(0, 1)
    }

    pub fn fixed_count(&self) -> usize {
        self.fixed_count
    }

    pub fn free_orbit_count(&self) -> usize {
        self.free_orbit_count
    }

    pub fn len(&self) -> usize {
        self.fixed_count + 2 * self.free_orbit_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn is_fixed(&self, p: usize) -> bool {
        p < self.fixed_count
    }

    /// The action of the generator of C2.
    pub fn act(&self, p: usize) -> usize {
        if p < self.fixed_count {
            p
        } else {
            self.fixed_count + ((p - self.fixed_count) ^ 1)
        }
    }

    /// Index of the point `oj.side`.
    pub fn free_point(&self, orbit: usize, side: usize) -> usize {
        debug_assert!(orbit < self.free_orbit_count && side < 2);
        self.fixed_count + 2 * orbit + side
    }

    /// For a free point, its orbit number and side.
    pub fn orbit_of(&self, p: usize) -> Option<(usize, usize)> {
        if p < self.fixed_count || p >= self.len() {
            None
        } else {
            let k = p - self.fixed_count;
            Some((k / 2, k % 2))
        }
    }

    /// The smaller of `p` and its translate.
    pub fn orbit_rep(&self, p: usize) -> usize {
        p.min(self.act(p))
    }

    /// One representative per orbit: the fixed points, then every `oj.0`.
    pub fn orbit_reps(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.fixed_count).chain((0..self.free_orbit_count).map(|j| self.free_point(j, 0)))
    }

    pub fn point_name(&self, p: usize) -> String {
        match self.orbit_of(p) {
            None => format!("f{p}"),
            Some((j, side)) => format!("o{j}.{side}"),
        }
    }

    pub fn parse_point(&self, name: &str) -> Option<usize> {
        if let Some(rest) = name.strip_prefix('f') {
            let i: usize = rest.parse().ok()?;
            (i < self.fixed_count).then_some(i)
        } else if let Some(rest) = name.strip_prefix('o') {
            let (j, side) = rest.split_once('.')?;
            let j: usize = j.parse().ok()?;
            let side: usize = side.parse().ok()?;
            (j < self.free_orbit_count && side < 2).then(|| self.free_point(j, side))
        } else {
            None
        }
    }

    /// Disjoint union of `copies` copies of `self`.
    pub fn times(&self, copies: usize) -> GSet {
        GSet::new(self.fixed_count * copies, self.free_orbit_count * copies)
    }
}

impl fmt::Display for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.fixed_count, self.free_orbit_count) {
            (0, 0) => write!(f, "∅"),
            (a, 0) => write!(f, "{a}∗"),
            (0, b) => write!(f, "{b}C2"),
            (a, b) => write!(f, "{a}∗+{b}C2"),
        }
    }
}

/// A finite C2-set built from arbitrary labels, relabeled canonically.
#[derive(Debug, Clone)]
pub(crate) struct Labeled<T> {
    pub set: GSet,
    pub elems: Vec<T>,
}

impl<T: Clone + Ord + Hash> Labeled<T> {
    /// Sort the labels, put fixed ones first and pair each free label with
    /// its translate.
    pub fn new(mut elems: Vec<T>, act: impl Fn(&T) -> T) -> Self {
        elems.sort();
        elems.dedup();
        let mut fixed = Vec::new();
        let mut free = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for e in &elems {
            let g = act(e);
            if &g == e {
                fixed.push(e.clone());
            } else if !seen.contains(e) {
                seen.insert(g.clone());
                free.push(e.clone());
                free.push(g);
            }
        }
        let set = GSet::new(fixed.len(), free.len() / 2);
        let elems: Vec<T> = fixed.into_iter().chain(free).collect();
        Labeled { set, elems }
    }
}

/// An equivariant map of finite C2-sets, stored as a total point function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GMap {
    source: GSet,
    target: GSet,
    map: Vec<usize>,
}

impl GMap {
    pub fn new(source: GSet, target: GSet, map: Vec<usize>) -> Result<Self, GSetError> {
        if map.len() != source.len() {
            return Err(GSetError::WrongLength { expected: source.len(), found: map.len() });
        }
        for &q in &map {
            if q >= target.len() {
                return Err(GSetError::OutOfRange(q, target));
            }
        }
        for p in source.points() {
            if map[source.act(p)] != target.act(map[p]) {
                return Err(GSetError::NotEquivariant(source.point_name(p)));
            }
        }
        Ok(GMap { source, target, map })
    }

    /// Build a map from the images of the orbit representatives (`fi` and
    /// `oj.0`); the images of `oj.1` follow by equivariance.
    pub fn from_orbit_images(
        source: GSet,
        target: GSet,
        fixed_images: &[usize],
        free_images: &[usize],
    ) -> Result<Self, GSetError> {
        if fixed_images.len() != source.fixed_count() || free_images.len() != source.free_orbit_count() {
            return Err(GSetError::WrongLength {
                expected: source.fixed_count() + source.free_orbit_count(),
                found: fixed_images.len() + free_images.len(),
            });
        }
        let mut map = Vec::with_capacity(source.len());
        map.extend_from_slice(fixed_images);
        for &q in free_images {
            if q >= target.len() {
                return Err(GSetError::OutOfRange(q, target));
            }
            map.push(q);
            map.push(target.act(q));
        }
        GMap::new(source, target, map)
    }

    pub fn identity(set: GSet) -> Self {
        GMap { source: set, target: set, map: set.points().collect() }
    }

    /// The unique map `C2 → ∗`.
    pub fn quotient() -> Self {
        GMap { source: GSet::free_orbit(), target: GSet::point(), map: vec![0, 0] }
    }

    /// Multiplication by the generator on the free orbit.
    pub fn gamma() -> Self {
        GMap { source: GSet::free_orbit(), target: GSet::free_orbit(), map: vec![1, 0] }
    }

    /// The unique map from the empty set.
    pub fn empty(target: GSet) -> Self {
        GMap { source: GSet::EMPTY, target, map: Vec::new() }
    }

    /// The unique map to the point.
    pub fn to_point(source: GSet) -> Self {
        GMap { source, target: GSet::point(), map: vec![0; source.len()] }
    }

    pub fn source(&self) -> GSet {
        self.source
    }

    pub fn target(&self) -> GSet {
        self.target
    }

    pub fn apply(&self, p: usize) -> usize {
        self.map[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn fiber(&self, q: usize) -> Vec<usize> {
        self.source.points().filter(|&p| self.map[p] == q).collect()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GMap) -> Result<GMap, GSetError> {
        if first.target != self.source {
            return Err(GSetError::NotComposable(first.target, self.source));
        }
        Ok(GMap { source: first.source, target: self.target, map: first.map.iter().map(|&p| self.map[p]).collect() })
    }

    pub fn is_bijective(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let mut hit = vec![false; self.target.len()];
        for &q in &self.map {
            hit[q] = true;
        }
        hit.into_iter().all(|b| b)
    }

    /// `self ⊔ other : S ⊔ S' → T ⊔ T'`.
    pub fn sum(&self, other: &GMap) -> GMap {
        let src = coproduct(self.source, other.source);
        let tgt = coproduct(self.target, other.target);
        let mut map = vec![0; src.object.len()];
        for p in self.source.points() {
            map[src.left.apply(p)] = tgt.left.apply(self.map[p]);
        }
        for p in other.source.points() {
            map[src.right.apply(p)] = tgt.right.apply(other.map[p]);
        }
        GMap { source: src.object, target: tgt.object, map }
    }

    /// The map `S ⊔ S' → T` restricting to `self` and `other`.
    pub fn copair(&self, other: &GMap) -> Result<GMap, GSetError> {
        if self.target != other.target {
            return Err(GSetError::TargetMismatch(self.target, other.target));
        }
        let src = coproduct(self.source, other.source);
        let mut map = vec![0; src.object.len()];
        for p in self.source.points() {
            map[src.left.apply(p)] = self.map[p];
        }
        for p in other.source.points() {
            map[src.right.apply(p)] = other.map[p];
        }
        Ok(GMap { source: src.object, target: self.target, map })
    }

    /// Every equivariant map `source → target`.
    pub fn all(source: GSet, target: GSet) -> Vec<GMap> {
        let fixed_choices: Vec<usize> = (0..target.fixed_count()).collect();
        let free_choices: Vec<usize> = target.points().collect();
        let slots = source.fixed_count() + source.free_orbit_count();
        let mut out = Vec::new();
        let mut choice = vec![0usize; slots];
        let radix = |k: usize| if k < source.fixed_count() { fixed_choices.len() } else { free_choices.len() };
        if (0..slots).any(|k| radix(k) == 0) {
            return out;
        }
        loop {
            let fixed: Vec<usize> = choice[..source.fixed_count()].iter().map(|&c| fixed_choices[c]).collect();
            let free: Vec<usize> = choice[source.fixed_count()..].iter().map(|&c| free_choices[c]).collect();
            out.push(GMap::from_orbit_images(source, target, &fixed, &free).expect("enumerated maps are equivariant"));
            let mut k = 0;
            loop {
                if k == slots {
                    return out;
                }
                choice[k] += 1;
                if choice[k] < radix(k) {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }
}

impl fmt::Display for GMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} [", self.source, self.target)?;
        for (i, p) in self.source.orbit_reps().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}↦{}", self.source.point_name(p), self.target.point_name(self.map[p]))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct GMapJson {
    source: GSet,
    target: GSet,
    map: BTreeMap<String, String>,
}

impl Serialize for GMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map =
            self.source.points().map(|p| (self.source.point_name(p), self.target.point_name(self.map[p]))).collect();
        GMapJson { source: self.source, target: self.target, map }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GMapJson::deserialize(deserializer)?;
        GMap::from_named(raw.source, raw.target, &raw.map).map_err(serde::de::Error::custom)
    }
}

impl GMap {
    /// Build a map from named images. Only `fi` and `oj.0` are required;
    /// a redundant `oj.1` entry is cross-checked by equivariance.
    pub fn from_named(source: GSet, target: GSet, named: &BTreeMap<String, String>) -> Result<GMap, GSetError> {
        let mut map: Vec<Option<usize>> = vec![None; source.len()];
        for (k, v) in named {
            let p = source.parse_point(k).ok_or_else(|| GSetError::BadPointName(k.clone()))?;
            let q = target.parse_point(v).ok_or_else(|| GSetError::BadPointName(v.clone()))?;
            map[p] = Some(q);
        }
        for p in source.orbit_reps() {
            if map[p].is_none() {
                return Err(GSetError::MissingImage(source.point_name(p)));
            }
        }
        let mut full = vec![0; source.len()];
        for p in source.orbit_reps() {
            let q = map[p].unwrap();
            full[p] = q;
            if !source.is_fixed(p) {
                full[source.act(p)] = target.act(q);
            }
        }
        for p in source.points() {
            if let Some(q) = map[p] {
                if q != full[p] {
                    return Err(GSetError::NotEquivariant(source.point_name(p)));
                }
            }
        }
        GMap::new(source, target, full)
    }
}

/// Which maps may carry norms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexingSystem {
    /// Stabilizer-preserving maps only: Green functors.
    Trivial,
    /// Every map: Tambara functors.
    Complete,
}

impl IndexingSystem {
    pub fn contains(&self, f: &GMap) -> bool {
        is_member(f, *self)
    }
}

/// Whether `f` lies in the indexing system. For the trivial system this
/// means no free point lands on a fixed point.
pub fn is_member(f: &GMap, system: IndexingSystem) -> bool {
    match system {
        IndexingSystem::Complete => true,
        IndexingSystem::Trivial => f.source.points().all(|p| f.source.is_fixed(p) == f.target.is_fixed(f.apply(p))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub object: GSet,
    /// Projection to the source of the first map.
    pub first: GMap,
    /// Projection to the source of the second map.
    pub second: GMap,
}

/// The pullback of `f: X → T` and `g: Y → T`.
pub fn pullback(f: &GMap, g: &GMap) -> Result<Pullback, GSetError> {
    if f.target != g.target {
        return Err(GSetError::TargetMismatch(f.target, g.target));
    }
    let (x, y) = (f.source, g.source);
    let mut pairs = Vec::new();
    for a in x.points() {
        for b in y.points() {
            if f.apply(a) == g.apply(b) {
                pairs.push((a, b));
            }
        }
    }
    let labeled = Labeled::new(pairs, |&(a, b)| (x.act(a), y.act(b)));
    let first = labeled.elems.iter().map(|&(a, _)| a).collect();
    let second = labeled.elems.iter().map(|&(_, b)| b).collect();
    Ok(Pullback {
        object: labeled.set,
        first: GMap { source: labeled.set, target: x, map: first },
        second: GMap { source: labeled.set, target: y, map: second },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coproduct {
    pub object: GSet,
    pub left: GMap,
    pub right: GMap,
}

/// The canonical disjoint union: fixed points of `a` then of `b`, then free
/// orbits of `a` then of `b`.
pub fn coproduct(a: GSet, b: GSet) -> Coproduct {
    let object = GSet::new(a.fixed_count + b.fixed_count, a.free_orbit_count + b.free_orbit_count);
    let embed = |set: GSet, fixed_offset: usize, orbit_offset: usize| -> Vec<usize> {
        set.points()
            .map(|p| match set.orbit_of(p) {
                None => p + fixed_offset,
                Some((j, side)) => object.free_point(j + orbit_offset, side),
            })
            .collect()
    };
    Coproduct {
        object,
        left: GMap { source: a, target: object, map: embed(a, 0, 0) },
        right: GMap { source: b, target: object, map: embed(b, a.fixed_count, a.free_orbit_count) },
    }
}

/// The codiagonal `⨿ᵏ S → S`.
pub fn fold(set: GSet, copies: usize) -> GMap {
    let mut map = GMap::empty(set);
    for _ in 0..copies {
        map = map.copair(&GMap::identity(set)).expect("same target");
    }
    map
}

/// A section over one point of the base: the base point and the chosen
/// preimage of every point of its fiber (fiber listed in increasing order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Section {
    pub base: usize,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentProduct {
    pub object: GSet,
    /// The structure map `∏_g A → T`.
    pub to_base: GMap,
    /// The section represented by each point of `object`.
    pub sections: Vec<Section>,
}

/// The dependent product `∏_g A` of `h: A → S` along `g: S → T`, by
/// enumerating the sections of `h` over every fiber of `g`.
pub fn dependent_product(h: &GMap, g: &GMap) -> Result<DependentProduct, GSetError> {
    if h.target != g.source {
        return Err(GSetError::NotComposable(h.target, g.source));
    }
    let (a, s, t) = (h.source, g.source, g.target);
    let fibers: Vec<Vec<usize>> = t.points().map(|q| g.fiber(q)).collect();
    let preimages: Vec<Vec<usize>> = s.points().map(|p| h.fiber(p)).collect();

    let mut sections = Vec::new();
    for q in t.points() {
        let fiber = &fibers[q];
        let mut values = vec![0usize; fiber.len()];
        enumerate_sections(fiber, &preimages, 0, &mut values, &mut |v| {
            sections.push(Section { base: q, values: v.to_vec() })
        });
    }

    let act = |sec: &Section| {
        let base = t.act(sec.base);
        let src_fiber = &fibers[sec.base];
        let values = fibers[base]
            .iter()
            .map(|&p| {
                let pre = s.act(p);
                let k = src_fiber.binary_search(&pre).expect("fibers are translates");
                a.act(sec.values[k])
            })
            .collect();
        Section { base, values }
    };
    let labeled = Labeled::new(sections, act);
    let to_base = GMap { source: labeled.set, target: t, map: labeled.elems.iter().map(|sec| sec.base).collect() };
    Ok(DependentProduct { object: labeled.set, to_base, sections: labeled.elems })
}

fn enumerate_sections(
    fiber: &[usize],
    preimages: &[Vec<usize>],
    k: usize,
    values: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if k == fiber.len() {
        emit(values);
        return;
    }
    for &choice in &preimages[fiber[k]] {
        values[k] = choice;
        enumerate_sections(fiber, preimages, k + 1, values, emit);
    }
}

/// The exponential diagram of `A →h S →g T`:
///
/// ```text
///   S ←h─ A ←f′─ S ×_T ∏_g A
///   │g               │g′
///   T ←──── h′ ───── ∏_g A
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialDiagram {
    pub product: DependentProduct,
    /// `S ×_T ∏_g A`.
    pub pullback: GSet,
    /// Evaluation `S ×_T ∏_g A → A`.
    pub f_prime: GMap,
    /// Projection `S ×_T ∏_g A → ∏_g A`.
    pub g_prime: GMap,
    /// Structure map `∏_g A → T`.
    pub h_prime: GMap,
}

pub fn exponential_diagram(g: &GMap, h: &GMap) -> Result<ExponentialDiagram, GSetError> {
    let product = dependent_product(h, g)?;
    let pb = pullback(g, &product.to_base)?;
    let f_prime = pb
        .object
        .points()
        .map(|e| {
            let p = pb.first.apply(e);
            let sec = &product.sections[pb.second.apply(e)];
            let fiber = g.fiber(sec.base);
            sec.values[fiber.binary_search(&p).expect("point lies over the section's base")]
        })
        .collect();
    let f_prime = GMap::new(pb.object, h.source, f_prime).expect("evaluation is equivariant");
    Ok(ExponentialDiagram {
        pullback: pb.object,
        f_prime,
        g_prime: pb.second,
        h_prime: product.to_base.clone(),
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> GSet {
        GSet::free_orbit()
    }

    #[test]
    fn action_is_an_involution_fixing_exactly_the_fixed_points() {
        let s = GSet::new(2, 3);
        assert_eq!(s.len(), 8);
        for p in s.points() {
            assert_eq!(s.act(s.act(p)), p);
            assert_eq!(s.act(p) == p, s.is_fixed(p));
        }
    }

    #[test]
    fn point_names_round_trip() {
        let s = GSet::new(2, 2);
        for p in s.points() {
            assert_eq!(s.parse_point(&s.point_name(p)), Some(p));
        }
        assert_eq!(s.parse_point("o2.0"), None);
        assert_eq!(s.parse_point("f2"), None);
        assert_eq!(s.parse_point("g0"), None);
    }

    #[test]
    fn non_equivariant_assignments_are_rejected() {
        // A fixed point cannot land on a free point.
        assert!(GMap::new(GSet::point(), c2(), vec![0]).is_err());
        // Both points of an orbit cannot go to the same free point.
        assert!(GMap::new(c2(), c2(), vec![0, 0]).is_err());
        assert!(GMap::new(c2(), GSet::point(), vec![0, 0]).is_ok());
    }

    #[test]
    fn pullback_of_quotient_with_itself_is_two_free_orbits() {
        let q = GMap::quotient();
        let pb = pullback(&q, &q).unwrap();
        assert_eq!(pb.object, GSet::new(0, 2));
    }

    #[test]
    fn pullback_along_identity() {
        let s = GSet::new(1, 2);
        let id = GMap::identity(s);
        let pb = pullback(&id, &id).unwrap();
        assert_eq!(pb.object, s);
        assert_eq!(pb.first, id);
        assert_eq!(pb.second, id);

        let pb = pullback(&GMap::identity(GSet::point()), &GMap::quotient()).unwrap();
        assert_eq!(pb.object, c2());
    }

    #[test]
    fn pullback_rejects_mismatched_targets() {
        assert!(pullback(&GMap::identity(c2()), &GMap::quotient()).is_err());
    }

    #[test]
    fn coproduct_and_fold() {
        let cp = coproduct(GSet::point(), c2());
        assert_eq!(cp.object, GSet::new(1, 1));
        let f = fold(c2(), 2);
        assert_eq!(f.source(), GSet::new(0, 2));
        assert_eq!(f.images(), &[0, 1, 0, 1]);
        assert_eq!(fold(GSet::new(2, 1), 1), GMap::identity(GSet::new(2, 1)));
    }

    #[test]
    fn dependent_product_examples() {
        // Sections of the identity over C2 → ∗: one fixed section.
        let dp = dependent_product(&GMap::identity(c2()), &GMap::quotient()).unwrap();
        assert_eq!(dp.object, GSet::point());

        // Along the identity nothing happens.
        let dp = dependent_product(&fold(c2(), 2), &GMap::identity(c2())).unwrap();
        assert_eq!(dp.object, GSet::new(0, 2));

        // k copies of C2 folded onto C2, pushed to ∗: k² sections, k fixed.
        for k in 1..=4 {
            let dp = dependent_product(&fold(c2(), k), &GMap::quotient()).unwrap();
            assert_eq!(dp.object.len(), k * k);
            assert_eq!(dp.object, GSet::new(k, (k * k - k) / 2));
        }
    }

    #[test]
    fn exponential_diagram_examples() {
        let e = exponential_diagram(&GMap::quotient(), &GMap::identity(c2())).unwrap();
        assert_eq!(e.product.object, GSet::point());
        assert_eq!(e.pullback, c2());
        assert_eq!(e.h_prime, GMap::identity(GSet::point()));

        let s = GSet::new(1, 1);
        let h = GMap::all(GSet::new(1, 2), s).into_iter().nth(5).unwrap();
        let e = exponential_diagram(&GMap::identity(s), &h).unwrap();
        assert_eq!(e.product.object, h.source());
        assert!(e.f_prime.is_bijective());
    }

    #[test]
    fn membership() {
        assert!(!is_member(&GMap::quotient(), IndexingSystem::Trivial));
        assert!(is_member(&GMap::quotient(), IndexingSystem::Complete));
        assert!(is_member(&fold(c2(), 2), IndexingSystem::Trivial));
    }

    #[test]
    fn json_requires_only_orbit_representatives() {
        let text = r#"{"source":{"fixed":1,"free":1},"target":{"fixed":0,"free":1},
                       "map":{"f0":"o0.0","o0.0":"o0.1"}}"#;
        assert!(serde_json::from_str::<GMap>(text).is_err());
        let text = r#"{"source":{"fixed":1,"free":1},"target":{"fixed":1,"free":1},
                       "map":{"f0":"f0","o0.0":"o0.1"}}"#;
        let m: GMap = serde_json::from_str(text).unwrap();
        assert_eq!(m.images(), &[0, 2, 1]);
        let bad = r#"{"source":{"fixed":0,"free":1},"target":{"fixed":0,"free":1},
                       "map":{"o0.0":"o0.1","o0.1":"o0.1"}}"#;
        assert!(serde_json::from_str::<GMap>(bad).is_err());
        let back: GMap = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn enumeration_counts() {
        // a'^a · |T|^b maps.
        assert_eq!(GMap::all(GSet::new(2, 1), GSet::new(1, 1)).len(), 3);
        assert_eq!(GMap::all(GSet::new(1, 2), GSet::new(2, 1)).len(), 2 * 16);
        assert_eq!(GMap::all(GSet::new(1, 0), GSet::new(0, 2)).len(), 0);
        assert_eq!(GMap::all(GSet::EMPTY, GSet::EMPTY).len(), 1);
    }
}
