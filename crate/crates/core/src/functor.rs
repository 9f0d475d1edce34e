//! The two-level interface for Green and Tambara functors over C2, and the
//! axiom checker.
//!
//! Over C2 a Mackey functor is determined by its values at `C2/C2` (the
//! *fixed* level) and `C2/e` (the *underlying* level), linked by
//! restriction, transfer and the Weyl conjugation on the underlying level.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    /// `C2/C2`.
    Fixed,
    /// `C2/e`.
    Underlying,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Fixed => f.write_str("fixed"),
            Level::Underlying => f.write_str("underlying"),
        }
    }
}

/// An element at one of the two levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value<F, U> {
    Fixed(F),
    Underlying(U),
}

impl<F, U> Value<F, U> {
    pub fn level(&self) -> Level {
        match self {
            Value::Fixed(_) => Level::Fixed,
            Value::Underlying(_) => Level::Underlying,
        }
    }
}

/// A commutative Green functor for C2.
pub trait GreenFunctor {
    type Fixed: Clone + PartialEq + fmt::Debug;
    type Under: Clone + PartialEq + fmt::Debug;

    fn fixed_zero(&self) -> Self::Fixed;
    fn fixed_one(&self) -> Self::Fixed;
    fn fixed_add(&self, a: &Self::Fixed, b: &Self::Fixed) -> Self::Fixed;
    fn fixed_neg(&self, a: &Self::Fixed) -> Self::Fixed;
    fn fixed_mul(&self, a: &Self::Fixed, b: &Self::Fixed) -> Self::Fixed;

    fn under_zero(&self) -> Self::Under;
    fn under_one(&self) -> Self::Under;
    fn under_add(&self, a: &Self::Under, b: &Self::Under) -> Self::Under;
    fn under_neg(&self, a: &Self::Under) -> Self::Under;
    fn under_mul(&self, a: &Self::Under, b: &Self::Under) -> Self::Under;

    /// Weyl conjugation `x ↦ x̄`.
    fn conj(&self, x: &Self::Under) -> Self::Under;
    fn res(&self, a: &Self::Fixed) -> Self::Under;
    fn tr(&self, x: &Self::Under) -> Self::Fixed;

    /// All fixed-level elements, when the carrier is finite.
    fn fixed_elements(&self) -> Option<Vec<Self::Fixed>> {
        None
    }

    fn under_elements(&self) -> Option<Vec<Self::Under>> {
        None
    }

    fn sample_fixed(&self, rng: &mut dyn RngCore) -> Self::Fixed;
    fn sample_under(&self, rng: &mut dyn RngCore) -> Self::Under;

    fn show_fixed(&self, a: &Self::Fixed) -> String;
    fn show_under(&self, x: &Self::Under) -> String;

    fn fixed_sub(&self, a: &Self::Fixed, b: &Self::Fixed) -> Self::Fixed {
        self.fixed_add(a, &self.fixed_neg(b))
    }

    fn under_sub(&self, a: &Self::Under, b: &Self::Under) -> Self::Under {
        self.under_add(a, &self.under_neg(b))
    }

    /// The image of an integer in the fixed ring.
    fn fixed_int(&self, k: &BigInt) -> Self::Fixed {
        let one = self.fixed_one();
        let v = times(k.abs(), self.fixed_zero(), &one, |a, b| self.fixed_add(a, b));
        if k.is_negative() {
            self.fixed_neg(&v)
        } else {
            v
        }
    }

    fn under_int(&self, k: &BigInt) -> Self::Under {
        let one = self.under_one();
        let v = times(k.abs(), self.under_zero(), &one, |a, b| self.under_add(a, b));
        if k.is_negative() {
            self.under_neg(&v)
        } else {
            v
        }
    }

    fn fixed_pow(&self, a: &Self::Fixed, e: u32) -> Self::Fixed {
        power(e, self.fixed_one(), a, |x, y| self.fixed_mul(x, y))
    }

    fn under_pow(&self, a: &Self::Under, e: u32) -> Self::Under {
        power(e, self.under_one(), a, |x, y| self.under_mul(x, y))
    }

    /// The Burnside class `t = tr(1)`.
    fn t(&self) -> Self::Fixed {
        self.tr(&self.under_one())
    }
}

/// A norm supplied alongside a functor rather than by a
/// [`TambaraFunctor`] impl, e.g. an induced table.
pub type NormFn<'a, R> = &'a dyn Fn(&<R as GreenFunctor>::Under) -> <R as GreenFunctor>::Fixed;

/// A Green functor with a norm `N: C2/e → C2/C2`.
pub trait TambaraFunctor: GreenFunctor {
    fn norm(&self, x: &Self::Under) -> Self::Fixed;
}

fn times<T: Clone>(k: BigInt, zero: T, x: &T, add: impl Fn(&T, &T) -> T) -> T {
    // double-and-add
    let mut acc = zero;
    let mut base = x.clone();
    let mut k = k;
    let two = BigInt::from(2);
    while !k.is_zero() {
        if (&k % &two) == BigInt::from(1) {
            acc = add(&acc, &base);
        }
        base = add(&base, &base);
        k /= &two;
    }
    acc
}

fn power<T: Clone>(mut e: u32, one: T, x: &T, mul: impl Fn(&T, &T) -> T) -> T {
    let mut acc = one;
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// A single failed identity together with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub identity: String,
    pub witness: String,
}

/// Outcome of an axiom check. Failures are collected, not fail-fast.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, identity: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation { identity: identity.to_string(), witness: witness() });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    /// Sort by identity name, then witness, and drop duplicates.
    pub fn finish(mut self) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self
    }

    /// The distinct identities that failed.
    pub fn failed_identities(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.violations.iter().map(|v| v.identity.as_str()).collect();
        names.dedup();
        names
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS ({} checks)", self.checks);
        }
        writeln!(f, "FAIL ({} of {} checks)", self.violations.len(), self.checks)?;
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.identity, v.witness)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every element, pair and triple of the (finite) carriers.
    Exhaustive,
    /// `count` random tuples drawn from a ChaCha8 stream seeded with `seed`.
    Sampled { seed: u64, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("exhaustive checking needs finite carriers")]
    NotEnumerable,
}

/// Elements to quantify over at one level: either all of them, or a sampled
/// list of tuples.
enum Domain<T> {
    All(Vec<T>),
    Samples(Vec<[T; 3]>),
}

impl<T: Clone> Domain<T> {
    fn singles(&self) -> Vec<&T> {
        match self {
            Domain::All(v) => v.iter().collect(),
            Domain::Samples(s) => s.iter().map(|t| &t[0]).collect(),
        }
    }

    fn pairs(&self) -> Vec<(&T, &T)> {
        match self {
            Domain::All(v) => v.iter().flat_map(|a| v.iter().map(move |b| (a, b))).collect(),
            Domain::Samples(s) => s.iter().map(|t| (&t[0], &t[1])).collect(),
        }
    }

    fn triples(&self) -> Vec<(&T, &T, &T)> {
        match self {
            Domain::All(v) => {
                v.iter().flat_map(|a| v.iter().flat_map(move |b| v.iter().map(move |c| (a, b, c)))).collect()
            }
            Domain::Samples(s) => s.iter().map(|t| (&t[0], &t[1], &t[2])).collect(),
        }
    }
}

struct Domains<R: GreenFunctor + ?Sized> {
    fixed: Domain<R::Fixed>,
    under: Domain<R::Under>,
    /// Mixed (fixed, underlying) pairs for Frobenius reciprocity.
    mixed: Vec<(R::Fixed, R::Under)>,
}

fn domains<R: GreenFunctor + ?Sized>(r: &R, mode: CheckMode) -> Result<Domains<R>, CheckError> {
    match mode {
        CheckMode::Exhaustive => {
            let fixed = r.fixed_elements().ok_or(CheckError::NotEnumerable)?;
            let under = r.under_elements().ok_or(CheckError::NotEnumerable)?;
            let mixed = fixed.iter().flat_map(|a| under.iter().map(move |b| (a.clone(), b.clone()))).collect();
            Ok(Domains { fixed: Domain::All(fixed), under: Domain::All(under), mixed })
        }
        CheckMode::Sampled { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut fixed = Vec::with_capacity(count);
            let mut under = Vec::with_capacity(count);
            let mut mixed = Vec::with_capacity(count);
            for _ in 0..count {
                fixed.push([r.sample_fixed(&mut rng), r.sample_fixed(&mut rng), r.sample_fixed(&mut rng)]);
                under.push([r.sample_under(&mut rng), r.sample_under(&mut rng), r.sample_under(&mut rng)]);
                mixed.push((r.sample_fixed(&mut rng), r.sample_under(&mut rng)));
            }
            Ok(Domains { fixed: Domain::Samples(fixed), under: Domain::Samples(under), mixed })
        }
    }
}

/// Ring laws at one level, with the operations passed as closures.
struct RingOps<'a, T> {
    level: &'static str,
    zero: T,
    one: T,
    add: &'a dyn Fn(&T, &T) -> T,
    neg: &'a dyn Fn(&T) -> T,
    mul: &'a dyn Fn(&T, &T) -> T,
    show: &'a dyn Fn(&T) -> String,
}

fn check_ring<T: Clone + PartialEq>(ops: &RingOps<'_, T>, dom: &Domain<T>, report: &mut Report) {
    let name = |s: &str| format!("{} {}", ops.level, s);
    let sh = ops.show;
    for a in dom.singles() {
        report.record(&name("additive identity"), (ops.add)(a, &ops.zero) == *a, || format!("a={}", sh(a)));
        report.record(&name("additive inverse"), (ops.add)(a, &(ops.neg)(a)) == ops.zero, || format!("a={}", sh(a)));
        report.record(&name("multiplicative identity"), (ops.mul)(a, &ops.one) == *a, || format!("a={}", sh(a)));
    }
    for (a, b) in dom.pairs() {
        report.record(&name("addition commutative"), (ops.add)(a, b) == (ops.add)(b, a), || {
            format!("a={}, b={}", sh(a), sh(b))
        });
        report.record(&name("multiplication commutative"), (ops.mul)(a, b) == (ops.mul)(b, a), || {
            format!("a={}, b={}", sh(a), sh(b))
        });
    }
    for (a, b, c) in dom.triples() {
        let w = || format!("a={}, b={}, c={}", sh(a), sh(b), sh(c));
        report.record(
            &name("addition associative"),
            (ops.add)(&(ops.add)(a, b), c) == (ops.add)(a, &(ops.add)(b, c)),
            w,
        );
        report.record(
            &name("multiplication associative"),
            (ops.mul)(&(ops.mul)(a, b), c) == (ops.mul)(a, &(ops.mul)(b, c)),
            w,
        );
        report.record(
            &name("distributivity"),
            (ops.mul)(a, &(ops.add)(b, c)) == (ops.add)(&(ops.mul)(a, b), &(ops.mul)(a, c)),
            w,
        );
    }
}

fn green_report<R: GreenFunctor + ?Sized>(r: &R, d: &Domains<R>) -> Report {
    let mut report = Report::default();
    let fixed_ops = RingOps {
        level: "fixed",
        zero: r.fixed_zero(),
        one: r.fixed_one(),
        add: &|a, b| r.fixed_add(a, b),
        neg: &|a| r.fixed_neg(a),
        mul: &|a, b| r.fixed_mul(a, b),
        show: &|a| r.show_fixed(a),
    };
    check_ring(&fixed_ops, &d.fixed, &mut report);
    let under_ops = RingOps {
        level: "underlying",
        zero: r.under_zero(),
        one: r.under_one(),
        add: &|a, b| r.under_add(a, b),
        neg: &|a| r.under_neg(a),
        mul: &|a, b| r.under_mul(a, b),
        show: &|a| r.show_under(a),
    };
    check_ring(&under_ops, &d.under, &mut report);

    let sf = |a: &R::Fixed| r.show_fixed(a);
    let su = |x: &R::Under| r.show_under(x);

    report.record("conj unital", r.conj(&r.under_one()) == r.under_one(), || "1".into());
    report.record("res unital", r.res(&r.fixed_one()) == r.under_one(), || "1".into());

    for x in d.under.singles() {
        report.record("conj involution", r.conj(&r.conj(x)) == *x, || format!("x={}", su(x)));
        report.record("tr conj-invariant", r.tr(&r.conj(x)) == r.tr(x), || format!("x={}", su(x)));
        let lhs = r.res(&r.tr(x));
        let rhs = r.under_add(x, &r.conj(x));
        report.record("res∘tr = 1 + conj", lhs == rhs, || {
            format!("x={}: res(tr x)={}, x+conj(x)={}", su(x), su(&lhs), su(&rhs))
        });
    }
    for (x, y) in d.under.pairs() {
        let w = || format!("x={}, y={}", su(x), su(y));
        report.record("conj additive", r.conj(&r.under_add(x, y)) == r.under_add(&r.conj(x), &r.conj(y)), w);
        report.record("conj multiplicative", r.conj(&r.under_mul(x, y)) == r.under_mul(&r.conj(x), &r.conj(y)), w);
        report.record("tr additive", r.tr(&r.under_add(x, y)) == r.fixed_add(&r.tr(x), &r.tr(y)), w);
    }
    for a in d.fixed.singles() {
        report.record("res lands in conj-invariants", r.conj(&r.res(a)) == r.res(a), || format!("a={}", sf(a)));
    }
    for (a, b) in d.fixed.pairs() {
        let w = || format!("a={}, b={}", sf(a), sf(b));
        report.record("res additive", r.res(&r.fixed_add(a, b)) == r.under_add(&r.res(a), &r.res(b)), w);
        report.record("res multiplicative", r.res(&r.fixed_mul(a, b)) == r.under_mul(&r.res(a), &r.res(b)), w);
    }
    for (a, x) in &d.mixed {
        let lhs = r.fixed_mul(a, &r.tr(x));
        let rhs = r.tr(&r.under_mul(&r.res(a), x));
        report.record("Frobenius a·tr(x) = tr(res(a)·x)", lhs == rhs, || {
            format!("a={}, x={}: {} vs {}", sf(a), su(x), sf(&lhs), sf(&rhs))
        });
    }
    report
}

fn norm_report<R: TambaraFunctor + ?Sized>(r: &R, d: &Domains<R>) -> Report {
    let mut report = Report::default();
    let sf = |a: &R::Fixed| r.show_fixed(a);
    let su = |x: &R::Under| r.show_under(x);
    report.record("N(1) = 1", r.norm(&r.under_one()) == r.fixed_one(), || {
        format!("N(1)={}", sf(&r.norm(&r.under_one())))
    });
    for x in d.under.singles() {
        report.record("N(conj x) = N(x)", r.norm(&r.conj(x)) == r.norm(x), || format!("x={}", su(x)));
        let lhs = r.res(&r.norm(x));
        let rhs = r.under_mul(x, &r.conj(x));
        report.record("res(N x) = x·conj(x)", lhs == rhs, || format!("x={}: {} vs {}", su(x), su(&lhs), su(&rhs)));
    }
    for (x, y) in d.under.pairs() {
        let lhs = r.norm(&r.under_mul(x, y));
        let rhs = r.fixed_mul(&r.norm(x), &r.norm(y));
        report.record("N multiplicative", lhs == rhs, || {
            format!("x={}, y={}: N(xy)={}, N(x)N(y)={}", su(x), su(y), sf(&lhs), sf(&rhs))
        });
        let lhs = r.norm(&r.under_add(x, y));
        let rhs = r.fixed_add(&r.fixed_add(&r.norm(x), &r.norm(y)), &r.tr(&r.under_mul(x, &r.conj(y))));
        report.record("N(x+y) = N(x)+N(y)+tr(x·conj(y))", lhs == rhs, || {
            format!("x={}, y={}: {} vs {}", su(x), su(y), sf(&lhs), sf(&rhs))
        });
    }
    report
}

/// Check the commutative Green functor axioms.
pub fn check_green_axioms<R: GreenFunctor + ?Sized>(r: &R, mode: CheckMode) -> Result<Report, CheckError> {
    let d = domains(r, mode)?;
    Ok(green_report(r, &d).finish())
}

/// Check the Green functor axioms together with the norm axioms.
pub fn check_tambara_axioms<R: TambaraFunctor + ?Sized>(r: &R, mode: CheckMode) -> Result<Report, CheckError> {
    let d = domains(r, mode)?;
    let mut report = green_report(r, &d);
    report.merge(norm_report(r, &d));
    Ok(report.finish())
}

/// Small helper for sampling: a uniform integer in `lo..=hi`.
pub fn sample_int(rng: &mut dyn RngCore, lo: i64, hi: i64) -> BigInt {
    let span = (hi - lo + 1) as u64;
    BigInt::from(lo + (rng.next_u64() % span) as i64)
}

/// Small helper for sampling: a uniform index below `n`.
pub fn sample_index(rng: &mut dyn RngCore, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}
