//! Table-backed finite Green and Tambara functors.
//!
//! Elements are indices into per-level name lists; every operation is a
//! lookup table. Tables are loaded from JSON, built from the fixture
//! families below, or obtained by tabulating any enumerable functor.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burnside::{render_burnside, Burnside};
use crate::functor::{
    check_green_axioms, check_tambara_axioms, sample_index, CheckMode, GreenFunctor, Report, TambaraFunctor,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FiniteError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{level}: duplicate element name `{name}`")]
    DuplicateName { level: String, name: String },
    #[error("{level}: no elements")]
    Empty { level: String },
    #[error("{table}: expected a {expected}×{expected} table")]
    TableShape { table: String, expected: usize },
    #[error("{context}: unknown element `{name}`")]
    UnknownName { context: String, name: String },
    #[error("{map}: no image for `{name}`")]
    MissingImage { map: String, name: String },
    #[error("this functor has no norm table")]
    NoNorm,
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("the involution is not a ring involution: {0}")]
    BadInvolution(String),
    #[error("axiom check failed:\n{0}")]
    Axioms(Report),
}

/// A finite commutative ring given by full tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
}

impl FiniteRing {
    pub fn new(
        names: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self, FiniteError> {
        let n = names.len();
        let square =
            |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|row| row.len() == n && row.iter().all(|&v| v < n));
        if !square(&add) {
            return Err(FiniteError::TableShape { table: "add".into(), expected: n });
        }
        if !square(&mul) {
            return Err(FiniteError::TableShape { table: "mul".into(), expected: n });
        }
        // An element without an additive inverse keeps itself as `neg`; the
        // axiom checker then reports the missing inverse.
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a][b] == zero).unwrap_or(a)).collect();
        Ok(FiniteRing { names, add, mul, zero, one, neg })
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn integers_mod(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        FiniteRing::new(names, add, mul, 0, 1 % n).expect("well-formed")
    }

    /// The product ring, elements named `(a,b)`.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Self {
        let (m, n) = (a.len(), b.len());
        let idx = |i: usize, j: usize| i * n + j;
        let names = (0..m * n).map(|k| format!("({},{})", a.names[k / n], b.names[k % n])).collect();
        let table = |ta: &Vec<Vec<usize>>, tb: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            (0..m * n).map(|x| (0..m * n).map(|y| idx(ta[x / n][y / n], tb[x % n][y % n])).collect()).collect()
        };
        FiniteRing::new(names, table(&a.add, &b.add), table(&a.mul, &b.mul), idx(a.zero, b.zero), idx(a.one, b.one))
            .expect("well-formed")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// The subring on `keep` (assumed closed), re-indexed in the given order.
    fn restrict(&self, keep: &[usize]) -> Option<FiniteRing> {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let sub = |t: &Vec<Vec<usize>>| -> Option<Vec<Vec<usize>>> {
            keep.iter().map(|&a| keep.iter().map(|&b| pos.get(&t[a][b]).copied()).collect()).collect()
        };
        FiniteRing::new(
            keep.iter().map(|&k| self.names[k].clone()).collect(),
            sub(&self.add)?,
            sub(&self.mul)?,
            *pos.get(&self.zero)?,
            *pos.get(&self.one)?,
        )
        .ok()
    }
}

/// A finite commutative Green functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGreenFunctor {
    fixed: FiniteRing,
    under: FiniteRing,
    conj: Vec<usize>,
    res: Vec<usize>,
    tr: Vec<usize>,
}

/// A finite Tambara functor: a finite Green functor plus a norm table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTambaraFunctor {
    green: FiniteGreenFunctor,
    norm: Vec<usize>,
}

impl FiniteGreenFunctor {
    pub fn new(
        fixed: FiniteRing,
        under: FiniteRing,
        conj: Vec<usize>,
        res: Vec<usize>,
        tr: Vec<usize>,
    ) -> Result<Self, FiniteError> {
        let check = |name: &str, map: &[usize], from: usize, to: usize| {
            if map.len() != from || map.iter().any(|&v| v >= to) {
                Err(FiniteError::TableShape { table: name.into(), expected: from })
            } else {
                Ok(())
            }
        };
        check("conj", &conj, under.len(), under.len())?;
        check("res", &res, fixed.len(), under.len())?;
        check("tr", &tr, under.len(), fixed.len())?;
        Ok(FiniteGreenFunctor { fixed, under, conj, res, tr })
    }

    pub fn fixed_ring(&self) -> &FiniteRing {
        &self.fixed
    }

    pub fn under_ring(&self) -> &FiniteRing {
        &self.under
    }

    pub fn with_norm(self, norm: Vec<usize>) -> Result<FiniteTambaraFunctor, FiniteError> {
        if norm.len() != self.under.len() || norm.iter().any(|&v| v >= self.fixed.len()) {
            return Err(FiniteError::TableShape { table: "norm".into(), expected: self.under.len() });
        }
        Ok(FiniteTambaraFunctor { green: self, norm })
    }

    /// Load and run the exhaustive Green axiom check.
    pub fn checked(self) -> Result<Self, FiniteError> {
        let report = check_green_axioms(&self, CheckMode::Exhaustive).expect("finite");
        if report.passed() {
            Ok(self)
        } else {
            Err(FiniteError::Axioms(report))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_table(None)).expect("serializable")
    }

    fn to_table(&self, norm: Option<&[usize]>) -> FunctorTable {
        let map = |m: &[usize], from: &FiniteRing, to: &FiniteRing| -> BTreeMap<String, String> {
            m.iter().enumerate().map(|(i, &j)| (from.names[i].clone(), to.names[j].clone())).collect()
        };
        FunctorTable {
            fixed: RingTable::from_ring(&self.fixed),
            underlying: RingTable::from_ring(&self.under),
            conj: map(&self.conj, &self.under, &self.under),
            res: map(&self.res, &self.fixed, &self.under),
            tr: map(&self.tr, &self.under, &self.fixed),
            norm: norm.map(|n| map(n, &self.under, &self.fixed)),
        }
    }
}

impl FiniteTambaraFunctor {
    /// The functor with one element at each level.
    pub fn zero_functor() -> Self {
        let ring = FiniteRing::integers_mod(1);
        FiniteGreenFunctor::new(ring.clone(), ring, vec![0], vec![0], vec![0])
            .and_then(|g| g.with_norm(vec![0]))
            .expect("well-formed")
    }

    /// The underlying Green functor (the norms forgotten).
    pub fn green(&self) -> &FiniteGreenFunctor {
        &self.green
    }

    pub fn norm_table(&self) -> &[usize] {
        &self.norm
    }

    pub fn checked(self) -> Result<Self, FiniteError> {
        let report = check_tambara_axioms(&self, CheckMode::Exhaustive).expect("finite");
        if report.passed() {
            Ok(self)
        } else {
            Err(FiniteError::Axioms(report))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.green.to_table(Some(&self.norm))).expect("serializable")
    }
}

impl GreenFunctor for FiniteGreenFunctor {
    type Fixed = usize;
    type Under = usize;

    fn fixed_zero(&self) -> usize {
        self.fixed.zero
    }
    fn fixed_one(&self) -> usize {
        self.fixed.one
    }
    fn fixed_add(&self, a: &usize, b: &usize) -> usize {
        self.fixed.add(*a, *b)
    }
    fn fixed_neg(&self, a: &usize) -> usize {
        self.fixed.neg(*a)
    }
    fn fixed_mul(&self, a: &usize, b: &usize) -> usize {
        self.fixed.mul(*a, *b)
    }
    fn under_zero(&self) -> usize {
        self.under.zero
    }
    fn under_one(&self) -> usize {
        self.under.one
    }
    fn under_add(&self, a: &usize, b: &usize) -> usize {
        self.under.add(*a, *b)
    }
    fn under_neg(&self, a: &usize) -> usize {
        self.under.neg(*a)
    }
    fn under_mul(&self, a: &usize, b: &usize) -> usize {
        self.under.mul(*a, *b)
    }
    fn conj(&self, x: &usize) -> usize {
        self.conj[*x]
    }
    fn res(&self, a: &usize) -> usize {
        self.res[*a]
    }
    fn tr(&self, x: &usize) -> usize {
        self.tr[*x]
    }
    fn fixed_elements(&self) -> Option<Vec<usize>> {
        Some((0..self.fixed.len()).collect())
    }
    fn under_elements(&self) -> Option<Vec<usize>> {
        Some((0..self.under.len()).collect())
    }
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> usize {
        sample_index(rng, self.fixed.len())
    }
    fn sample_under(&self, rng: &mut dyn RngCore) -> usize {
        sample_index(rng, self.under.len())
    }
    fn show_fixed(&self, a: &usize) -> String {
        self.fixed.names[*a].clone()
    }
    fn show_under(&self, x: &usize) -> String {
        self.under.names[*x].clone()
    }
}

impl GreenFunctor for FiniteTambaraFunctor {
    type Fixed = usize;
    type Under = usize;

    fn fixed_zero(&self) -> usize {
        self.green.fixed_zero()
    }
    fn fixed_one(&self) -> usize {
        self.green.fixed_one()
    }
    fn fixed_add(&self, a: &usize, b: &usize) -> usize {
        self.green.fixed_add(a, b)
    }
    fn fixed_neg(&self, a: &usize) -> usize {
        self.green.fixed_neg(a)
    }
    fn fixed_mul(&self, a: &usize, b: &usize) -> usize {
        self.green.fixed_mul(a, b)
    }
    fn under_zero(&self) -> usize {
        self.green.under_zero()
    }
    fn under_one(&self) -> usize {
        self.green.under_one()
    }
    fn under_add(&self, a: &usize, b: &usize) -> usize {
        self.green.under_add(a, b)
    }
    fn under_neg(&self, a: &usize) -> usize {
        self.green.under_neg(a)
    }
    fn under_mul(&self, a: &usize, b: &usize) -> usize {
        self.green.under_mul(a, b)
    }
    fn conj(&self, x: &usize) -> usize {
        self.green.conj(x)
    }
    fn res(&self, a: &usize) -> usize {
        self.green.res(a)
    }
    fn tr(&self, x: &usize) -> usize {
        self.green.tr(x)
    }
    fn fixed_elements(&self) -> Option<Vec<usize>> {
        self.green.fixed_elements()
    }
    fn under_elements(&self) -> Option<Vec<usize>> {
        self.green.under_elements()
    }
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> usize {
        self.green.sample_fixed(rng)
    }
    fn sample_under(&self, rng: &mut dyn RngCore) -> usize {
        self.green.sample_under(rng)
    }
    fn show_fixed(&self, a: &usize) -> String {
        self.green.show_fixed(a)
    }
    fn show_under(&self, x: &usize) -> String {
        self.green.show_under(x)
    }
}

impl TambaraFunctor for FiniteTambaraFunctor {
    fn norm(&self, x: &usize) -> usize {
        self.norm[*x]
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingTable {
    elements: Vec<String>,
    add: Vec<Vec<String>>,
    mul: Vec<Vec<String>>,
    zero: String,
    one: String,
}

impl RingTable {
    fn from_ring(r: &FiniteRing) -> Self {
        let names =
            |t: &Vec<Vec<usize>>| t.iter().map(|row| row.iter().map(|&v| r.names[v].clone()).collect()).collect();
        RingTable {
            elements: r.names.clone(),
            add: names(&r.add),
            mul: names(&r.mul),
            zero: r.names[r.zero].clone(),
            one: r.names[r.one].clone(),
        }
    }

    fn into_ring(self, level: &str) -> Result<FiniteRing, FiniteError> {
        if self.elements.is_empty() {
            return Err(FiniteError::Empty { level: level.into() });
        }
        let mut index = HashMap::new();
        for (i, n) in self.elements.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(FiniteError::DuplicateName { level: level.into(), name: n.clone() });
            }
        }
        let lookup = |ctx: &str, n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| FiniteError::UnknownName { context: format!("{level}.{ctx}"), name: n.to_string() })
        };
        let k = self.elements.len();
        let table = |name: &str, t: &Vec<Vec<String>>| -> Result<Vec<Vec<usize>>, FiniteError> {
            if t.len() != k || t.iter().any(|row| row.len() != k) {
                return Err(FiniteError::TableShape { table: format!("{level}.{name}"), expected: k });
            }
            t.iter().map(|row| row.iter().map(|n| lookup(name, n)).collect()).collect()
        };
        let add = table("add", &self.add)?;
        let mul = table("mul", &self.mul)?;
        let zero = lookup("zero", &self.zero)?;
        let one = lookup("one", &self.one)?;
        FiniteRing::new(self.elements, add, mul, zero, one)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctorTable {
    fixed: RingTable,
    underlying: RingTable,
    conj: BTreeMap<String, String>,
    res: BTreeMap<String, String>,
    tr: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    norm: Option<BTreeMap<String, String>>,
}

fn map_table(
    name: &str,
    m: &BTreeMap<String, String>,
    from: &FiniteRing,
    to: &FiniteRing,
) -> Result<Vec<usize>, FiniteError> {
    for k in m.keys() {
        if from.index_of(k).is_none() {
            return Err(FiniteError::UnknownName { context: name.into(), name: k.clone() });
        }
    }
    from.names
        .iter()
        .map(|src| {
            let dst = m.get(src).ok_or_else(|| FiniteError::MissingImage { map: name.into(), name: src.clone() })?;
            to.index_of(dst).ok_or_else(|| FiniteError::UnknownName { context: name.into(), name: dst.clone() })
        })
        .collect()
}

/// A loaded table functor, with or without a norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableFunctor {
    Green(FiniteGreenFunctor),
    Tambara(FiniteTambaraFunctor),
}

impl TableFunctor {
    /// Parse the JSON table format. Only structure is validated here; the
    /// axioms are left to the checker.
    pub fn from_json_str(text: &str) -> Result<Self, FiniteError> {
        let raw: FunctorTable = serde_json::from_str(text).map_err(|e| FiniteError::Json(e.to_string()))?;
        let fixed = raw.fixed.into_ring("fixed")?;
        let under = raw.underlying.into_ring("underlying")?;
        let conj = map_table("conj", &raw.conj, &under, &under)?;
        let res = map_table("res", &raw.res, &fixed, &under)?;
        let tr = map_table("tr", &raw.tr, &under, &fixed)?;
        let norm = raw.norm.as_ref().map(|n| map_table("norm", n, &under, &fixed)).transpose()?;
        let green = FiniteGreenFunctor::new(fixed, under, conj, res, tr)?;
        Ok(match norm {
            None => TableFunctor::Green(green),
            Some(norm) => TableFunctor::Tambara(green.with_norm(norm)?),
        })
    }

    pub fn green(&self) -> &FiniteGreenFunctor {
        match self {
            TableFunctor::Green(g) => g,
            TableFunctor::Tambara(t) => t.green(),
        }
    }

    pub fn tambara(&self) -> Option<&FiniteTambaraFunctor> {
        match self {
            TableFunctor::Green(_) => None,
            TableFunctor::Tambara(t) => Some(t),
        }
    }
}

/// The fixed-point Tambara functor of a finite commutative ring `B` with a
/// ring involution `σ`: fixed level `B^σ`, underlying `B`, restriction the
/// inclusion, `tr(b) = b + σb` and `N(b) = b·σb`.
pub fn fixed_point_functor(b: &FiniteRing, sigma: &[usize]) -> Result<FiniteTambaraFunctor, FiniteError> {
    let n = b.len();
    if sigma.len() != n || sigma.iter().any(|&s| s >= n) {
        return Err(FiniteError::BadInvolution("not a total map".into()));
    }
    for x in 0..n {
        if sigma[sigma[x]] != x {
            return Err(FiniteError::BadInvolution(format!("σσ({}) ≠ {}", b.name(x), b.name(x))));
        }
        for y in 0..n {
            if sigma[b.add(x, y)] != b.add(sigma[x], sigma[y]) || sigma[b.mul(x, y)] != b.mul(sigma[x], sigma[y]) {
                return Err(FiniteError::BadInvolution(format!("not a ring map at ({}, {})", b.name(x), b.name(y))));
            }
        }
    }
    if sigma[b.one()] != b.one() {
        return Err(FiniteError::BadInvolution("σ(1) ≠ 1".into()));
    }
    let keep: Vec<usize> = (0..n).filter(|&x| sigma[x] == x).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let fixed = b.restrict(&keep).expect("invariants of a ring involution form a subring");
    let res = keep.clone();
    let tr = (0..n).map(|x| pos[&b.add(x, sigma[x])]).collect();
    let norm = (0..n).map(|x| pos[&b.mul(x, sigma[x])]).collect();
    FiniteGreenFunctor::new(fixed, b.clone(), sigma.to_vec(), res, tr)?.with_norm(norm)?.checked()
}

/// The Green functor `A/n`: both levels of the Burnside functor reduced
/// modulo `n`. Fixed elements are `a + bt` with `0 ≤ a, b < n`.
pub fn burnside_mod_green(n: u64) -> Result<FiniteGreenFunctor, FiniteError> {
    if n < 2 {
        return Err(FiniteError::Modulus(n));
    }
    let m = n as usize;
    let under = FiniteRing::integers_mod(m);
    let idx = |a: &BigInt, b: &BigInt| reduce(a, n) + m * reduce(b, n);
    type Pair = (BigInt, BigInt);
    let elems: Vec<Pair> = (0..m * m).map(|k| (BigInt::from(k % m), BigInt::from(k / m))).collect();
    let names = elems.iter().map(|(a, b)| render_burnside(a, b)).collect();
    let op = |f: &dyn Fn(&Pair, &Pair) -> Pair| -> Vec<Vec<usize>> {
        elems
            .iter()
            .map(|x| {
                elems
                    .iter()
                    .map(|y| {
                        let (a, b) = f(x, y);
                        idx(&a, &b)
                    })
                    .collect()
            })
            .collect()
    };
    let add = op(&|x, y| (&x.0 + &y.0, &x.1 + &y.1));
    let mul = op(&|x, y| (&x.0 * &y.0, &x.0 * &y.1 + &x.1 * &y.0 + BigInt::from(2) * &x.1 * &y.1));
    let fixed = FiniteRing::new(names, add, mul, 0, 1)?;
    let res = elems.iter().map(|(a, b)| reduce(&(a + BigInt::from(2) * b), n)).collect();
    let tr = (0..m).map(|k| idx(&BigInt::from(0), &BigInt::from(k))).collect();
    FiniteGreenFunctor::new(fixed, under, (0..m).collect(), res, tr)?.checked()
}

/// `A/n` with the norm induced from the Burnside norm on representatives
/// `0..n`. The result is checked exhaustively; for even `n` the induced
/// norm is not well defined (`N(n) = n + (n² − n)/2·t` is not `0` mod `n`)
/// and the check fails.
pub fn burnside_mod(n: u64) -> Result<FiniteTambaraFunctor, FiniteError> {
    burnside_mod_unchecked(n)?.checked()
}

/// `A/n` with the induced norm table, without the Tambara axiom check.
pub fn burnside_mod_unchecked(n: u64) -> Result<FiniteTambaraFunctor, FiniteError> {
    let green = burnside_mod_green(n)?;
    let m = n as usize;
    let norm = (0..m)
        .map(|k| {
            let e = Burnside.norm(&BigInt::from(k));
            reduce(&e.a, n) + m * reduce(&e.b, n)
        })
        .collect();
    green.with_norm(norm)
}

fn reduce(k: &BigInt, n: u64) -> usize {
    use num_integer::Integer;
    k.mod_floor(&BigInt::from(n)).to_usize().expect("small")
}

/// A finite functor tabulated from an enumerable one, together with the
/// element behind each index.
#[derive(Clone, Debug)]
pub struct Tabulated<F, U, T> {
    pub table: T,
    pub fixed: Vec<F>,
    pub under: Vec<U>,
}

impl<F: PartialEq, U: PartialEq, T> Tabulated<F, U, T> {
    pub fn fixed_index(&self, a: &F) -> Option<usize> {
        self.fixed.iter().position(|x| x == a)
    }

    pub fn under_index(&self, x: &U) -> Option<usize> {
        self.under.iter().position(|y| y == x)
    }
}

fn unique_names(mut names: Vec<String>) -> Vec<String> {
    let mut seen = HashMap::new();
    for (i, n) in names.iter_mut().enumerate() {
        if seen.insert(n.clone(), i).is_some() {
            *n = format!("{n}#{i}");
        }
    }
    names
}

fn tabulate_green_parts<R: GreenFunctor + ?Sized>(r: &R) -> Option<Tabulated<R::Fixed, R::Under, FiniteGreenFunctor>> {
    let fixed = r.fixed_elements()?;
    let under = r.under_elements()?;
    let fi = |a: &R::Fixed| fixed.iter().position(|x| x == a).expect("operations stay in the carrier");
    let ui = |a: &R::Under| under.iter().position(|x| x == a).expect("operations stay in the carrier");
    let ring = |elems: &[R::Fixed]| {
        FiniteRing::new(
            unique_names(elems.iter().map(|a| r.show_fixed(a)).collect()),
            elems.iter().map(|a| elems.iter().map(|b| fi(&r.fixed_add(a, b))).collect()).collect(),
            elems.iter().map(|a| elems.iter().map(|b| fi(&r.fixed_mul(a, b))).collect()).collect(),
            fi(&r.fixed_zero()),
            fi(&r.fixed_one()),
        )
        .expect("well-formed")
    };
    let fixed_ring = ring(&fixed);
    let under_ring = FiniteRing::new(
        unique_names(under.iter().map(|a| r.show_under(a)).collect()),
        under.iter().map(|a| under.iter().map(|b| ui(&r.under_add(a, b))).collect()).collect(),
        under.iter().map(|a| under.iter().map(|b| ui(&r.under_mul(a, b))).collect()).collect(),
        ui(&r.under_zero()),
        ui(&r.under_one()),
    )
    .expect("well-formed");
    let table = FiniteGreenFunctor::new(
        fixed_ring,
        under_ring,
        under.iter().map(|x| ui(&r.conj(x))).collect(),
        fixed.iter().map(|a| ui(&r.res(a))).collect(),
        under.iter().map(|x| fi(&r.tr(x))).collect(),
    )
    .expect("well-formed");
    Some(Tabulated { table, fixed, under })
}

/// Tabulate an enumerable Green functor. `None` if a carrier is infinite.
pub fn tabulate_green<R: GreenFunctor + ?Sized>(r: &R) -> Option<Tabulated<R::Fixed, R::Under, FiniteGreenFunctor>> {
    tabulate_green_parts(r)
}

/// Tabulate an enumerable Tambara functor.
pub fn tabulate_tambara<R: TambaraFunctor + ?Sized>(
    r: &R,
) -> Option<Tabulated<R::Fixed, R::Under, FiniteTambaraFunctor>> {
    let t = tabulate_green_parts(r)?;
    let norm = t.under.iter().map(|x| t.fixed_index(&r.norm(x)).expect("norm stays in the carrier")).collect();
    let table = t.table.with_norm(norm).expect("well-formed");
    Some(Tabulated { table, fixed: t.fixed, under: t.under })
}
