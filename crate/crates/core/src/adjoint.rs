//! The right adjoint `F` from Green functors to Tambara functors.
//!
//! `F(R)(∗)` is the set of pairs `(n, x)` of fixed elements of `R` with
//! `res(n) = res(x)²`, and `F(R)(C2)` the pairs `(n, x)` with `n` fixed,
//! `x` underlying and `res(n) = x·x̄`. Multiplication is coordinatewise,
//! addition carries a correction term in `n`, and the norm forgets `x`:
//! `N(n, x) = (n², n)`.

use std::fmt;

use rand::RngCore;
use thiserror::Error;

use crate::finite::{tabulate_tambara, FiniteGreenFunctor, FiniteTambaraFunctor, Tabulated};
use crate::functor::{GreenFunctor, Level, Report, TambaraFunctor};

/// A pair `(n, x)`; `x` lives at the level of the element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjointElement<N, X> {
    pub n: N,
    pub x: X,
}

impl<N, X> AdjointElement<N, X> {
    pub fn new(n: N, x: X) -> Self {
        AdjointElement { n, x }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("({n}, {x}) is not an element at the {level} level: {reason}")]
pub struct MembershipError {
    pub level: Level,
    pub n: String,
    pub x: String,
    pub reason: String,
}

/// `F(R)` for a Green functor `R`, borrowing `R`.
#[derive(Clone, Copy, Debug)]
pub struct RightAdjoint<'a, R: GreenFunctor + ?Sized> {
    r: &'a R,
    checks: bool,
}

type FixedPair<R> = AdjointElement<<R as GreenFunctor>::Fixed, <R as GreenFunctor>::Fixed>;
type UnderPair<R> = AdjointElement<<R as GreenFunctor>::Fixed, <R as GreenFunctor>::Under>;

impl<'a, R: GreenFunctor + ?Sized> RightAdjoint<'a, R> {
    /// Membership of operands is asserted in debug builds.
    pub fn new(r: &'a R) -> Self {
        RightAdjoint { r, checks: cfg!(debug_assertions) }
    }

    /// Turn the operand membership assertions on or off.
    pub fn with_membership_checks(mut self, on: bool) -> Self {
        self.checks = on;
        self
    }

    pub fn base(&self) -> &'a R {
        self.r
    }

    /// `t·a = tr(res a)`.
    fn t_times(&self, a: &R::Fixed) -> R::Fixed {
        self.r.tr(&self.r.res(a))
    }

    pub fn is_fixed_member(&self, e: &FixedPair<R>) -> bool {
        let rx = self.r.res(&e.x);
        self.r.res(&e.n) == self.r.under_mul(&rx, &rx)
    }

    pub fn is_under_member(&self, e: &UnderPair<R>) -> bool {
        self.r.res(&e.n) == self.r.under_mul(&e.x, &self.r.conj(&e.x))
    }

    pub fn fixed_element(&self, n: R::Fixed, x: R::Fixed) -> Result<FixedPair<R>, MembershipError> {
        let e = AdjointElement::new(n, x);
        if self.is_fixed_member(&e) {
            Ok(e)
        } else {
            Err(MembershipError {
                level: Level::Fixed,
                n: self.r.show_fixed(&e.n),
                x: self.r.show_fixed(&e.x),
                reason: "res(n) ≠ res(x)²".into(),
            })
        }
    }

    pub fn under_element(&self, n: R::Fixed, x: R::Under) -> Result<UnderPair<R>, MembershipError> {
        let e = AdjointElement::new(n, x);
        if self.is_under_member(&e) {
            Ok(e)
        } else {
            Err(MembershipError {
                level: Level::Underlying,
                n: self.r.show_fixed(&e.n),
                x: self.r.show_under(&e.x),
                reason: "res(n) ≠ x·conj(x)".into(),
            })
        }
    }

    fn guard_fixed(&self, e: &FixedPair<R>) {
        if self.checks && !self.is_fixed_member(e) {
            panic!("operand {} violates res(n) = res(x)²", self.show_fixed(e));
        }
    }

    fn guard_under(&self, e: &UnderPair<R>) {
        if self.checks && !self.is_under_member(e) {
            panic!("operand {} violates res(n) = x·conj(x)", self.show_under(e));
        }
    }
}

impl<R: GreenFunctor + ?Sized> GreenFunctor for RightAdjoint<'_, R> {
    type Fixed = FixedPair<R>;
    type Under = UnderPair<R>;

    fn fixed_zero(&self) -> Self::Fixed {
        AdjointElement::new(self.r.fixed_zero(), self.r.fixed_zero())
    }
    fn fixed_one(&self) -> Self::Fixed {
        AdjointElement::new(self.r.fixed_one(), self.r.fixed_one())
    }
    fn fixed_add(&self, a: &Self::Fixed, b: &Self::Fixed) -> Self::Fixed {
        self.guard_fixed(a);
        self.guard_fixed(b);
        let r = self.r;
        let cross = self.t_times(&r.fixed_mul(&a.x, &b.x));
        AdjointElement::new(r.fixed_add(&r.fixed_add(&a.n, &b.n), &cross), r.fixed_add(&a.x, &b.x))
    }
    fn fixed_neg(&self, a: &Self::Fixed) -> Self::Fixed {
        self.guard_fixed(a);
        let r = self.r;
        let sq = self.t_times(&r.fixed_mul(&a.x, &a.x));
        AdjointElement::new(r.fixed_sub(&sq, &a.n), r.fixed_neg(&a.x))
    }
    fn fixed_mul(&self, a: &Self::Fixed, b: &Self::Fixed) -> Self::Fixed {
        self.guard_fixed(a);
        self.guard_fixed(b);
        AdjointElement::new(self.r.fixed_mul(&a.n, &b.n), self.r.fixed_mul(&a.x, &b.x))
    }
    fn under_zero(&self) -> Self::Under {
        AdjointElement::new(self.r.fixed_zero(), self.r.under_zero())
    }
    fn under_one(&self) -> Self::Under {
        AdjointElement::new(self.r.fixed_one(), self.r.under_one())
    }
    fn under_add(&self, a: &Self::Under, b: &Self::Under) -> Self::Under {
        self.guard_under(a);
        self.guard_under(b);
        let r = self.r;
        let cross = r.tr(&r.under_mul(&a.x, &r.conj(&b.x)));
        AdjointElement::new(r.fixed_add(&r.fixed_add(&a.n, &b.n), &cross), r.under_add(&a.x, &b.x))
    }
    fn under_neg(&self, a: &Self::Under) -> Self::Under {
        self.guard_under(a);
        let r = self.r;
        let sq = r.tr(&r.under_mul(&a.x, &r.conj(&a.x)));
        AdjointElement::new(r.fixed_sub(&sq, &a.n), r.under_neg(&a.x))
    }
    fn under_mul(&self, a: &Self::Under, b: &Self::Under) -> Self::Under {
        self.guard_under(a);
        self.guard_under(b);
        AdjointElement::new(self.r.fixed_mul(&a.n, &b.n), self.r.under_mul(&a.x, &b.x))
    }
    fn conj(&self, a: &Self::Under) -> Self::Under {
        self.guard_under(a);
        AdjointElement::new(a.n.clone(), self.r.conj(&a.x))
    }
    fn res(&self, a: &Self::Fixed) -> Self::Under {
        self.guard_fixed(a);
        AdjointElement::new(a.n.clone(), self.r.res(&a.x))
    }
    fn tr(&self, a: &Self::Under) -> Self::Fixed {
        self.guard_under(a);
        let r = self.r;
        let n = r.fixed_add(&r.fixed_add(&a.n, &a.n), &r.tr(&r.under_mul(&a.x, &a.x)));
        AdjointElement::new(n, r.tr(&a.x))
    }

    fn fixed_elements(&self) -> Option<Vec<Self::Fixed>> {
        let elems = self.r.fixed_elements()?;
        let mut out = Vec::new();
        for x in &elems {
            for n in &elems {
                let e = AdjointElement::new(n.clone(), x.clone());
                if self.is_fixed_member(&e) {
                    out.push(e);
                }
            }
        }
        Some(out)
    }
    fn under_elements(&self) -> Option<Vec<Self::Under>> {
        let fixed = self.r.fixed_elements()?;
        let under = self.r.under_elements()?;
        let mut out = Vec::new();
        for x in &under {
            for n in &fixed {
                let e = AdjointElement::new(n.clone(), x.clone());
                if self.is_under_member(&e) {
                    out.push(e);
                }
            }
        }
        Some(out)
    }

    /// `(y² + tr(res k) − 2k, y)`: `tr(res k) − 2k` restricts to zero.
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> Self::Fixed {
        let r = self.r;
        let y = r.sample_fixed(rng);
        let k = r.sample_fixed(rng);
        let kernel = r.fixed_sub(&self.t_times(&k), &r.fixed_add(&k, &k));
        AdjointElement::new(r.fixed_add(&r.fixed_mul(&y, &y), &kernel), y)
    }
    /// Restrictions of sampled fixed pairs.
    fn sample_under(&self, rng: &mut dyn RngCore) -> Self::Under {
        let a = self.sample_fixed(rng);
        self.res(&a)
    }

    fn show_fixed(&self, a: &Self::Fixed) -> String {
        format!("({}, {})", self.r.show_fixed(&a.n), self.r.show_fixed(&a.x))
    }
    fn show_under(&self, a: &Self::Under) -> String {
        format!("({}, {})", self.r.show_fixed(&a.n), self.r.show_under(&a.x))
    }
}

impl<R: GreenFunctor + ?Sized> TambaraFunctor for RightAdjoint<'_, R> {
    fn norm(&self, a: &Self::Under) -> Self::Fixed {
        self.guard_under(a);
        AdjointElement::new(self.r.fixed_mul(&a.n, &a.n), a.n.clone())
    }
}

/// `η_S` at the fixed level: `s ↦ (N(res s), s)`.
pub fn unit_fixed<S: TambaraFunctor + ?Sized>(s: &S, a: &S::Fixed) -> AdjointElement<S::Fixed, S::Fixed> {
    AdjointElement::new(s.norm(&s.res(a)), a.clone())
}

/// `η_S` at the underlying level: `u ↦ (N(u), u)`.
pub fn unit_under<S: TambaraFunctor + ?Sized>(s: &S, u: &S::Under) -> AdjointElement<S::Fixed, S::Under> {
    AdjointElement::new(s.norm(u), u.clone())
}

/// `ε_R`: `(n, x) ↦ x` at both levels.
pub fn counit<N, X: Clone>(e: &AdjointElement<N, X>) -> X {
    e.x.clone()
}

/// The transpose of `φ: iS → R` at the fixed level: `s ↦ (φ(N(res s)), φ(s))`.
pub fn transpose_fixed<S, R>(s: &S, phi_fixed: impl Fn(&S::Fixed) -> R::Fixed, a: &S::Fixed) -> FixedPair<R>
where
    S: TambaraFunctor + ?Sized,
    R: GreenFunctor + ?Sized,
{
    let e = unit_fixed(s, a);
    AdjointElement::new(phi_fixed(&e.n), phi_fixed(&e.x))
}

/// The transpose at the underlying level: `u ↦ (φ(N u), φ(u))`.
pub fn transpose_under<S, R>(
    s: &S,
    phi_fixed: impl Fn(&S::Fixed) -> R::Fixed,
    phi_under: impl Fn(&S::Under) -> R::Under,
    u: &S::Under,
) -> UnderPair<R>
where
    S: TambaraFunctor + ?Sized,
    R: GreenFunctor + ?Sized,
{
    let e = unit_under(s, u);
    AdjointElement::new(phi_fixed(&e.n), phi_under(&e.x))
}

/// A map between finite functors as index tables, one per level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomTable {
    pub fixed: Vec<usize>,
    pub under: Vec<usize>,
}

impl HomTable {
    pub fn after(&self, first: &HomTable) -> HomTable {
        HomTable {
            fixed: first.fixed.iter().map(|&i| self.fixed[i]).collect(),
            under: first.under.iter().map(|&i| self.under[i]).collect(),
        }
    }
}

type Finite = dyn GreenFunctor<Fixed = usize, Under = usize>;

/// Source and target of a finite hom search, with norms when both have them.
struct HomProblem<'a> {
    s: &'a Finite,
    t: &'a Finite,
    norms: Option<(&'a [usize], &'a [usize])>,
}

#[derive(Clone)]
struct Partial {
    fixed: Vec<Option<usize>>,
    under: Vec<Option<usize>>,
    done_fixed: Vec<usize>,
    done_under: Vec<usize>,
    queue: Vec<(Level, usize)>,
}

impl Partial {
    fn set(&mut self, level: Level, a: usize, img: usize) -> bool {
        let slot = match level {
            Level::Fixed => &mut self.fixed[a],
            Level::Underlying => &mut self.under[a],
        };
        match *slot {
            Some(v) => v == img,
            None => {
                *slot = Some(img);
                self.queue.push((level, a));
                true
            }
        }
    }
}

impl HomProblem<'_> {
    fn sizes(r: &Finite) -> (usize, usize) {
        (r.fixed_elements().expect("finite").len(), r.under_elements().expect("finite").len())
    }

    /// Close the assignment under every operation; false on a clash.
    fn propagate(&self, p: &mut Partial) -> bool {
        let (s, t) = (self.s, self.t);
        while let Some((level, a)) = p.queue.pop() {
            match level {
                Level::Fixed => {
                    let i = p.fixed[a].expect("queued elements are assigned");
                    if !p.set(Level::Fixed, s.fixed_neg(&a), t.fixed_neg(&i))
                        || !p.set(Level::Underlying, s.res(&a), t.res(&i))
                    {
                        return false;
                    }
                    p.done_fixed.push(a);
                    for k in 0..p.done_fixed.len() {
                        let b = p.done_fixed[k];
                        let j = p.fixed[b].expect("done elements are assigned");
                        if !p.set(Level::Fixed, s.fixed_add(&a, &b), t.fixed_add(&i, &j))
                            || !p.set(Level::Fixed, s.fixed_mul(&a, &b), t.fixed_mul(&i, &j))
                        {
                            return false;
                        }
                    }
                }
                Level::Underlying => {
                    let i = p.under[a].expect("queued elements are assigned");
                    if !p.set(Level::Underlying, s.under_neg(&a), t.under_neg(&i))
                        || !p.set(Level::Underlying, s.conj(&a), t.conj(&i))
                        || !p.set(Level::Fixed, s.tr(&a), t.tr(&i))
                    {
                        return false;
                    }
                    if let Some((ns, nt)) = self.norms {
                        if !p.set(Level::Fixed, ns[a], nt[i]) {
                            return false;
                        }
                    }
                    p.done_under.push(a);
                    for k in 0..p.done_under.len() {
                        let b = p.done_under[k];
                        let j = p.under[b].expect("done elements are assigned");
                        if !p.set(Level::Underlying, s.under_add(&a, &b), t.under_add(&i, &j))
                            || !p.set(Level::Underlying, s.under_mul(&a, &b), t.under_mul(&i, &j))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn start(&self) -> Option<Partial> {
        let (sf, su) = Self::sizes(self.s);
        let mut p = Partial {
            fixed: vec![None; sf],
            under: vec![None; su],
            done_fixed: Vec::new(),
            done_under: Vec::new(),
            queue: Vec::new(),
        };
        let ok = p.set(Level::Fixed, self.s.fixed_zero(), self.t.fixed_zero())
            && p.set(Level::Fixed, self.s.fixed_one(), self.t.fixed_one())
            && p.set(Level::Underlying, self.s.under_zero(), self.t.under_zero())
            && p.set(Level::Underlying, self.s.under_one(), self.t.under_one());
        (ok && self.propagate(&mut p)).then_some(p)
    }

    fn search(&self, p: Partial, targets: (usize, usize), out: &mut Vec<HomTable>) {
        let next = p
            .fixed
            .iter()
            .position(Option::is_none)
            .map(|a| (Level::Fixed, a, targets.0))
            .or_else(|| p.under.iter().position(Option::is_none).map(|a| (Level::Underlying, a, targets.1)));
        let Some((level, a, count)) = next else {
            out.push(HomTable {
                fixed: p.fixed.iter().map(|v| v.expect("complete")).collect(),
                under: p.under.iter().map(|v| v.expect("complete")).collect(),
            });
            return;
        };
        for img in 0..count {
            let mut q = p.clone();
            if q.set(level, a, img) && self.propagate(&mut q) {
                self.search(q, targets, out);
            }
        }
    }

    fn all(&self) -> Vec<HomTable> {
        let mut out = Vec::new();
        if let Some(p) = self.start() {
            self.search(p, Self::sizes(self.t), &mut out);
        }
        out.sort();
        out
    }

    /// Whether a complete table is a homomorphism.
    fn accepts(&self, h: &HomTable) -> bool {
        let (sf, su) = Self::sizes(self.s);
        let (tf, tu) = Self::sizes(self.t);
        if h.fixed.len() != sf
            || h.under.len() != su
            || h.fixed.iter().any(|&v| v >= tf)
            || h.under.iter().any(|&v| v >= tu)
        {
            return false;
        }
        let Some(mut p) = self.start() else {
            return false;
        };
        (0..sf).all(|a| p.set(Level::Fixed, a, h.fixed[a]))
            && (0..su).all(|a| p.set(Level::Underlying, a, h.under[a]))
            && self.propagate(&mut p)
    }
}

/// All Green functor homomorphisms `S → T`, in sorted order.
///
/// Images are chosen one element at a time and every forced image (sums,
/// products, negatives, conjugates, restrictions, transfers of elements
/// already placed) is propagated before the next choice, so the search
/// visits little more than the images of a generating set.
pub fn green_homs(s: &FiniteGreenFunctor, t: &FiniteGreenFunctor) -> Vec<HomTable> {
    HomProblem { s, t, norms: None }.all()
}

/// All Tambara functor homomorphisms `S → T`, in sorted order.
pub fn tambara_homs(s: &FiniteTambaraFunctor, t: &FiniteTambaraFunctor) -> Vec<HomTable> {
    HomProblem { s, t, norms: Some((s.norm_table(), t.norm_table())) }.all()
}

pub fn is_green_hom(s: &FiniteGreenFunctor, t: &FiniteGreenFunctor, h: &HomTable) -> bool {
    HomProblem { s, t, norms: None }.accepts(h)
}

pub fn is_tambara_hom(s: &FiniteTambaraFunctor, t: &FiniteTambaraFunctor, h: &HomTable) -> bool {
    HomProblem { s, t, norms: Some((s.norm_table(), t.norm_table())) }.accepts(h)
}

/// `F(R)` of a finite Green functor as a table, remembering each pair.
pub type AdjointTable = Tabulated<AdjointElement<usize, usize>, AdjointElement<usize, usize>, FiniteTambaraFunctor>;

pub fn tabulate_adjoint(r: &FiniteGreenFunctor) -> AdjointTable {
    tabulate_tambara(&RightAdjoint::new(r).with_membership_checks(false)).expect("finite carriers")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjointError {
    #[error("the given map is not a Green functor homomorphism")]
    NotGreenHom,
    #[error("the given map is not a Tambara functor homomorphism")]
    NotTambaraHom,
}

/// The transpose `S → F(R)` of a Green hom `φ: iS → R`.
pub fn transpose(
    s: &FiniteTambaraFunctor,
    r: &FiniteGreenFunctor,
    fr: &AdjointTable,
    phi: &HomTable,
) -> Result<HomTable, AdjointError> {
    if !is_green_hom(s.green(), r, phi) {
        return Err(AdjointError::NotGreenHom);
    }
    Ok(transpose_unchecked(s, fr, phi))
}

fn transpose_unchecked(s: &FiniteTambaraFunctor, fr: &AdjointTable, phi: &HomTable) -> HomTable {
    let pf = |a: &usize| phi.fixed[*a];
    let pu = |u: &usize| phi.under[*u];
    let n_fixed = s.green().fixed_ring().len();
    let n_under = s.green().under_ring().len();
    HomTable {
        fixed: (0..n_fixed)
            .map(|a| {
                let e = transpose_fixed::<_, FiniteGreenFunctor>(s, pf, &a);
                fr.fixed_index(&e).expect("the transpose lands in F(R)")
            })
            .collect(),
        under: (0..n_under)
            .map(|u| {
                let e = transpose_under::<_, FiniteGreenFunctor>(s, pf, pu, &u);
                fr.under_index(&e).expect("the transpose lands in F(R)")
            })
            .collect(),
    }
}

/// `ε ∘ i(ψ)` for a Tambara hom `ψ: S → F(R)`.
pub fn untranspose(s: &FiniteTambaraFunctor, fr: &AdjointTable, psi: &HomTable) -> Result<HomTable, AdjointError> {
    if !is_tambara_hom(s, &fr.table, psi) {
        return Err(AdjointError::NotTambaraHom);
    }
    Ok(untranspose_unchecked(fr, psi))
}

fn untranspose_unchecked(fr: &AdjointTable, psi: &HomTable) -> HomTable {
    HomTable {
        fixed: psi.fixed.iter().map(|&i| counit(&fr.fixed[i])).collect(),
        under: psi.under.iter().map(|&i| counit(&fr.under[i])).collect(),
    }
}

/// `F(ρ)` for a Green hom `ρ: R → R′`, between tabulated adjoints.
pub fn adjoint_map(rho: &HomTable, from: &AdjointTable, to: &AdjointTable) -> HomTable {
    HomTable {
        fixed: from
            .fixed
            .iter()
            .map(|e| {
                to.fixed_index(&AdjointElement::new(rho.fixed[e.n], rho.fixed[e.x])).expect("F(ρ) preserves membership")
            })
            .collect(),
        under: from
            .under
            .iter()
            .map(|e| {
                to.under_index(&AdjointElement::new(rho.fixed[e.n], rho.under[e.x])).expect("F(ρ) preserves membership")
            })
            .collect(),
    }
}

/// Outcome of [`verify_adjunction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub green_homs: usize,
    pub tambara_homs: usize,
    pub report: Report,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

impl fmt::Display for AdjunctionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Green homs iS → R: {}", self.green_homs)?;
        writeln!(f, "Tambara homs S → F(R): {}", self.tambara_homs)?;
        write!(f, "{}", self.report)
    }
}

fn show_table(h: &HomTable) -> String {
    format!("fixed {:?}, underlying {:?}", h.fixed, h.under)
}

/// Enumerate both hom-sets, check that transpose and untranspose are
/// mutually inverse bijections between them, that the unit of `S` and the
/// counit of `R` are homomorphisms, and both triangle identities.
pub fn verify_adjunction(s: &FiniteTambaraFunctor, r: &FiniteGreenFunctor) -> AdjunctionReport {
    let fr = tabulate_adjoint(r);
    let greens = green_homs(s.green(), r);
    let tambaras = tambara_homs(s, &fr.table);
    let mut report = Report::default();

    for phi in &greens {
        let psi = transpose_unchecked(s, &fr, phi);
        report.record("transpose(φ) is a Tambara hom", is_tambara_hom(s, &fr.table, &psi), || show_table(phi));
        report.record("untranspose(transpose(φ)) = φ", &untranspose_unchecked(&fr, &psi) == phi, || show_table(phi));
        report.record("transpose(φ) is enumerated", tambaras.binary_search(&psi).is_ok(), || show_table(phi));
    }
    for psi in &tambaras {
        let phi = untranspose_unchecked(&fr, psi);
        report.record("untranspose(ψ) is a Green hom", is_green_hom(s.green(), r, &phi), || show_table(psi));
        report.record("transpose(untranspose(ψ)) = ψ", &transpose_unchecked(s, &fr, &phi) == psi, || show_table(psi));
    }
    report.record("hom-sets have equal size", greens.len() == tambaras.len(), || {
        format!("{} Green homs, {} Tambara homs", greens.len(), tambaras.len())
    });

    report.merge(check_unit(s));
    report.merge(check_counit(r, &fr));
    report.merge(check_triangles(s, r, &fr));
    AdjunctionReport { green_homs: greens.len(), tambara_homs: tambaras.len(), report: report.finish() }
}

/// `η_S: S → F(iS)` is a Tambara hom.
pub fn check_unit(s: &FiniteTambaraFunctor) -> Report {
    let fs = tabulate_adjoint(s.green());
    let eta = HomTable {
        fixed: (0..s.green().fixed_ring().len())
            .map(|a| fs.fixed_index(&unit_fixed(s, &a)).expect("unit lands in F(iS)"))
            .collect(),
        under: (0..s.green().under_ring().len())
            .map(|u| fs.under_index(&unit_under(s, &u)).expect("unit lands in F(iS)"))
            .collect(),
    };
    let mut report = Report::default();
    report.record("unit is a Tambara hom", is_tambara_hom(s, &fs.table, &eta), || show_table(&eta));
    report
}

/// `ε_R: iF(R) → R` is a Green hom.
pub fn check_counit(r: &FiniteGreenFunctor, fr: &AdjointTable) -> Report {
    let eps = untranspose_unchecked(
        fr,
        &HomTable { fixed: (0..fr.fixed.len()).collect(), under: (0..fr.under.len()).collect() },
    );
    let mut report = Report::default();
    report.record("counit is a Green hom", is_green_hom(fr.table.green(), r, &eps), || show_table(&eps));
    report
}

/// `F(ε_R) ∘ η_{F(R)} = 1` on `F(R)` and `ε_{iS} ∘ i(η_S) = 1` on `iS`.
pub fn check_triangles(s: &FiniteTambaraFunctor, r: &FiniteGreenFunctor, fr: &AdjointTable) -> Report {
    let mut report = Report::default();
    let f = &fr.table;
    for (e, pair) in fr.fixed.iter().enumerate() {
        let eta = unit_fixed(f, &e);
        let back = AdjointElement::new(counit(&fr.fixed[eta.n]), counit(&fr.fixed[eta.x]));
        report.record("F(ε)∘η = 1 on F(R)(∗)", &back == pair, || {
            format!("({}, {})", r.show_fixed(&pair.n), r.show_fixed(&pair.x))
        });
    }
    for (e, pair) in fr.under.iter().enumerate() {
        let eta = unit_under(f, &e);
        let back = AdjointElement::new(counit(&fr.fixed[eta.n]), counit(&fr.under[eta.x]));
        report.record("F(ε)∘η = 1 on F(R)(C2)", &back == pair, || {
            format!("({}, {})", r.show_fixed(&pair.n), r.show_under(&pair.x))
        });
    }
    for a in 0..s.green().fixed_ring().len() {
        report.record("ε∘i(η) = 1 on S(∗)", counit(&unit_fixed(s, &a)) == a, || s.show_fixed(&a));
    }
    for u in 0..s.green().under_ring().len() {
        report.record("ε∘i(η) = 1 on S(C2)", counit(&unit_under(s, &u)) == u, || s.show_under(&u));
    }
    report
}

/// Naturality in `R`: for every Green hom `ρ: R → R′` and `φ: iS → R`,
/// `transpose(ρ∘φ) = F(ρ) ∘ transpose(φ)`.
pub fn verify_naturality(s: &FiniteTambaraFunctor, r: &FiniteGreenFunctor, r2: &FiniteGreenFunctor) -> Report {
    let fr = tabulate_adjoint(r);
    let fr2 = tabulate_adjoint(r2);
    let phis = green_homs(s.green(), r);
    let mut report = Report::default();
    for rho in green_homs(r, r2) {
        let f_rho = adjoint_map(&rho, &fr, &fr2);
        report.record("F(ρ) is a Tambara hom", is_tambara_hom(&fr.table, &fr2.table, &f_rho), || show_table(&rho));
        for phi in &phis {
            let lhs = transpose_unchecked(s, &fr2, &rho.after(phi));
            let rhs = f_rho.after(&transpose_unchecked(s, &fr, phi));
            report.record("transpose(ρ∘φ) = F(ρ)∘transpose(φ)", lhs == rhs, || {
                format!("ρ: {}; φ: {}", show_table(&rho), show_table(phi))
            });
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{Burnside, BurnsideElement};
    use crate::finite::{burnside_mod, burnside_mod_green, fixed_point_functor, FiniteRing};
    use crate::functor::{check_tambara_axioms, CheckMode};

    fn b(a: i64, t: i64) -> BurnsideElement {
        BurnsideElement::new(a, t)
    }

    #[test]
    fn burnside_norm_forgets_x() {
        let f = RightAdjoint::new(&Burnside);
        // res(2 + t) = 4 = x·x̄ for x = ±2
        let e = f.under_element(b(2, 1), 2.into()).unwrap();
        let e2 = f.under_element(b(2, 1), (-2).into()).unwrap();
        assert_eq!(f.norm(&e), AdjointElement::new(b(4, 6), b(2, 1)));
        assert_eq!(f.norm(&e), f.norm(&e2));
        // t has no underlying partner: res(t) = 2 is not a square
        assert!(f.fixed_element(b(0, 2), b(0, 1)).is_ok());
    }

    #[test]
    fn unit_on_burnside() {
        assert_eq!(unit_fixed(&Burnside, &b(0, 1)), AdjointElement::new(b(2, 1), b(0, 1)));
        assert_eq!(unit_fixed(&Burnside, &b(1, 0)), AdjointElement::new(b(1, 0), b(1, 0)));
    }

    #[test]
    fn membership_is_enforced() {
        let f = RightAdjoint::new(&Burnside);
        assert!(f.fixed_element(b(1, 0), b(0, 1)).is_err());
        assert!(f.under_element(b(4, 0), 2.into()).is_ok());
    }

    #[test]
    #[should_panic(expected = "violates")]
    fn checked_operations_reject_non_members() {
        let f = RightAdjoint::new(&Burnside).with_membership_checks(true);
        let bad = AdjointElement::new(b(1, 0), b(0, 1));
        f.fixed_add(&bad, &bad);
    }

    #[test]
    fn carriers_over_a_mod_2() {
        let r = burnside_mod_green(2).unwrap();
        let f = RightAdjoint::new(&r);
        assert_eq!(f.fixed_elements().unwrap().len(), 8);
        assert_eq!(f.under_elements().unwrap().len(), 4);
        let report = check_tambara_axioms(&f, CheckMode::Exhaustive).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn sampled_axioms_over_burnside() {
        let f = RightAdjoint::new(&Burnside).with_membership_checks(true);
        let report = check_tambara_axioms(&f, CheckMode::Sampled { seed: 3, count: 300 }).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn adjunction_for_z2_into_a_mod_2() {
        let s = fixed_point_functor(&FiniteRing::integers_mod(2), &[0, 1]).unwrap();
        let r = burnside_mod_green(2).unwrap();
        let out = verify_adjunction(&s, &r);
        assert!(out.passed(), "{out}");
        // tr(1) = 0 in S but t in A/2, so both sides are empty
        assert_eq!((out.green_homs, out.tambara_homs), (0, 0));
    }

    #[test]
    fn adjunction_with_nonempty_hom_sets() {
        let r = burnside_mod_green(2).unwrap();
        let fr = tabulate_adjoint(&r);
        let out = verify_adjunction(&fr.table, &r);
        assert!(out.passed(), "{out}");
        assert!(out.green_homs >= 1);

        let s = burnside_mod(3).unwrap();
        let out = verify_adjunction(&s, s.green());
        assert!(out.passed(), "{out}");
        assert_eq!(out.green_homs, 1);
    }

    #[test]
    fn naturality_along_the_counit() {
        let s = burnside_mod(3).unwrap();
        let r = burnside_mod_green(3).unwrap();
        let report = verify_naturality(&s, &tabulate_adjoint(&r).table.green().clone(), &r);
        assert!(report.passed(), "{report}");
        assert!(report.checks > 1);
    }

    #[test]
    fn transpose_rejects_non_homs() {
        let s = fixed_point_functor(&FiniteRing::integers_mod(2), &[0, 1]).unwrap();
        let r = burnside_mod_green(2).unwrap();
        let fr = tabulate_adjoint(&r);
        let bogus = HomTable { fixed: vec![0, 0], under: vec![0, 0] };
        assert_eq!(transpose(&s, &r, &fr, &bogus), Err(AdjointError::NotGreenHom));
    }

    #[test]
    fn identity_is_the_only_self_hom_of_a_mod_3() {
        let t = burnside_mod(3).unwrap();
        let homs = tambara_homs(&t, &t);
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].fixed, (0..9).collect::<Vec<_>>());
    }
}
