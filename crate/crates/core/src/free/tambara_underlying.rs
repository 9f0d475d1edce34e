//! The free Tambara functor on underlying-level generators `x_1..x_k`.
//!
//! Underlying level `Z[x, x̄]`. The fixed level has basis `nᵝ` and
//! `nᵝ·tr(m)` where `n = N(x)` and `m` runs over monomials with no factor
//! `x_i·x̄_i`, taken up to conjugation. For one generator `tr(xⁱ) = t_i`,
//! `t_0 = t`, and the products come out as
//! `t_i·t_j = t_{i+j} + n^{min(i,j)}·t_{|i−j|}`.

use num_bigint::BigInt;
use rand::RngCore;

use super::lincomb::{power_factor, random_lincomb, LinComb, Monomial};
use super::{
    add_exps, norm_names, random_exps, under_conj, under_product, UMono, SAMPLE_COEFF, SAMPLE_DEGREE, SAMPLE_TERMS,
};
use crate::burnside::Burnside;
use crate::functor::{sample_index, GreenFunctor, TambaraFunctor};

/// `nᵝ` (when `t` is false) or `nᵝ·tr(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TuBasis {
    pub deg: u32,
    pub t: bool,
    /// Reduced and canonical up to conjugation; the unit when `t` is false.
    pub m: UMono,
    pub n: Vec<u32>,
}

impl TuBasis {
    pub fn plain(n: Vec<u32>) -> Self {
        let k = n.len();
        let deg = 2 * n.iter().sum::<u32>();
        TuBasis { deg, t: false, m: UMono::one(k), n }
    }

    /// `nᵝ·tr(m)` for an arbitrary monomial `m`; norm factors `x_i·x̄_i` of
    /// `m` are pulled out as powers of `n_i`.
    pub fn transfer(m: &UMono, n: Vec<u32>) -> Self {
        let (beta, rest) = m.split_norms();
        let n = add_exps(&n, &beta);
        let m = rest.canonical_up_to_conj();
        let deg = 2 * n.iter().sum::<u32>() + m.degree();
        TuBasis { deg, t: true, m, n }
    }

    pub fn gens(&self) -> usize {
        self.n.len()
    }
}

impl Monomial for TuBasis {
    fn render(&self) -> String {
        let k = self.gens();
        let mut parts: Vec<String> = Vec::new();
        if self.t {
            if self.m.is_one() {
                parts.push("t".into());
            } else if k == 1 {
                parts.push(format!("t_{}", self.m.x[0]));
            } else {
                parts.push(format!("tr({})", self.m.render()));
            }
        }
        for (name, &e) in norm_names(k).iter().zip(&self.n) {
            parts.extend(power_factor(name, e));
        }
        parts.join("*")
    }
}

pub type TuFixed = LinComb<TuBasis>;
pub type TuUnder = LinComb<UMono>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeTambaraUnderlying {
    gens: usize,
}

impl Default for FreeTambaraUnderlying {
    fn default() -> Self {
        FreeTambaraUnderlying::new()
    }
}

impl FreeTambaraUnderlying {
    pub fn new() -> Self {
        FreeTambaraUnderlying { gens: 1 }
    }

    pub fn with_generators(gens: usize) -> Self {
        FreeTambaraUnderlying { gens }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn x_i(&self, i: usize) -> TuUnder {
        let mut x = vec![0; self.gens];
        x[i] = 1;
        LinComb::monomial(UMono::new(x, vec![0; self.gens]))
    }

    pub fn n_i(&self, i: usize) -> TuFixed {
        let mut n = vec![0; self.gens];
        n[i] = 1;
        LinComb::monomial(TuBasis::plain(n))
    }

    pub fn x(&self) -> TuUnder {
        self.x_i(0)
    }

    pub fn n(&self) -> TuFixed {
        self.n_i(0)
    }

    /// `t_i = tr(xⁱ)` (one generator).
    pub fn t_i(&self, i: u32) -> TuFixed {
        LinComb::monomial(TuBasis::transfer(&UMono::single(i, 0), vec![0]))
    }

    /// Basis monomials of degree at most `max_deg` (one generator).
    pub fn basis(max_deg: u32) -> Vec<TuBasis> {
        let mut out = Vec::new();
        for a in 0..=max_deg / 2 {
            out.push(TuBasis::plain(vec![a]));
            for i in 0..=max_deg - 2 * a {
                out.push(TuBasis::transfer(&UMono::single(i, 0), vec![a]));
            }
        }
        out.sort();
        out
    }

    pub fn under_basis(max_deg: u32) -> Vec<UMono> {
        (0..=max_deg).flat_map(|d| (0..=d).map(move |j| UMono::single(d - j, j))).collect()
    }

    fn norm_power(&self, m: &UMono) -> Vec<u32> {
        add_exps(&m.x, &m.xbar)
    }

    fn int_norm(&self, c: &BigInt) -> TuFixed {
        let b = Burnside.norm(c);
        let zero = vec![0; self.gens];
        LinComb::term(TuBasis::plain(zero.clone()), b.a)
            .add(&LinComb::term(TuBasis::transfer(&UMono::one(self.gens), zero), b.b))
    }
}

fn basis_mul(a: &TuBasis, b: &TuBasis) -> TuFixed {
    let n = add_exps(&a.n, &b.n);
    match (a.t, b.t) {
        (false, false) => LinComb::monomial(TuBasis::plain(n)),
        (true, false) => LinComb::monomial(TuBasis::transfer(&a.m, n)),
        (false, true) => LinComb::monomial(TuBasis::transfer(&b.m, n)),
        (true, true) => {
            // tr(m)·tr(m') = tr(m·res tr(m')) = tr(m·m') + tr(m·conj m')
            LinComb::monomial(TuBasis::transfer(&a.m.mul(&b.m), n.clone()))
                .add(&LinComb::monomial(TuBasis::transfer(&a.m.mul(&b.m.conj()), n)))
        }
    }
}

impl GreenFunctor for FreeTambaraUnderlying {
    type Fixed = TuFixed;
    type Under = TuUnder;

    fn fixed_zero(&self) -> TuFixed {
        LinComb::zero()
    }
    fn fixed_one(&self) -> TuFixed {
        LinComb::monomial(TuBasis::plain(vec![0; self.gens]))
    }
    fn fixed_add(&self, a: &TuFixed, b: &TuFixed) -> TuFixed {
        a.add(b)
    }
    fn fixed_neg(&self, a: &TuFixed) -> TuFixed {
        a.neg()
    }
    fn fixed_mul(&self, a: &TuFixed, b: &TuFixed) -> TuFixed {
        a.mul_with(b, basis_mul)
    }
    fn under_zero(&self) -> TuUnder {
        LinComb::zero()
    }
    fn under_one(&self) -> TuUnder {
        LinComb::monomial(UMono::one(self.gens))
    }
    fn under_add(&self, a: &TuUnder, b: &TuUnder) -> TuUnder {
        a.add(b)
    }
    fn under_neg(&self, a: &TuUnder) -> TuUnder {
        a.neg()
    }
    fn under_mul(&self, a: &TuUnder, b: &TuUnder) -> TuUnder {
        under_product(a, b)
    }
    fn conj(&self, x: &TuUnder) -> TuUnder {
        under_conj(x)
    }
    fn res(&self, a: &TuFixed) -> TuUnder {
        a.map_linear(|b| {
            let norms = LinComb::monomial(UMono::new(b.n.clone(), b.n.clone()));
            if b.t {
                let m = LinComb::monomial(b.m.clone()).add(&LinComb::monomial(b.m.conj()));
                under_product(&norms, &m)
            } else {
                norms
            }
        })
    }
    fn tr(&self, x: &TuUnder) -> TuFixed {
        x.map_linear(|m| LinComb::monomial(TuBasis::transfer(m, vec![0; self.gens])))
    }
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> TuFixed {
        let k = self.gens;
        random_lincomb(rng, SAMPLE_TERMS, SAMPLE_COEFF, |rng| {
            let n = random_exps(rng, k, SAMPLE_DEGREE / 2);
            if sample_index(rng, 3) == 0 {
                TuBasis::plain(n)
            } else {
                let all = random_exps(rng, 2 * k, SAMPLE_DEGREE);
                TuBasis::transfer(&UMono::new(all[..k].to_vec(), all[k..].to_vec()), n)
            }
        })
    }
    fn sample_under(&self, rng: &mut dyn RngCore) -> TuUnder {
        super::random_under(rng, self.gens, true)
    }
    fn show_fixed(&self, a: &TuFixed) -> String {
        a.to_string()
    }
    fn show_under(&self, x: &TuUnder) -> String {
        x.to_string()
    }
    fn fixed_int(&self, k: &BigInt) -> TuFixed {
        self.fixed_one().scale(k)
    }
    fn under_int(&self, k: &BigInt) -> TuUnder {
        self.under_one().scale(k)
    }
}

impl TambaraFunctor for FreeTambaraUnderlying {
    /// Term by term: `N(c·m + p) = N(c)·n^{deg m} + N(p) + tr(c·m·conj p)`,
    /// with `N(xⁱx̄ʲ) = n^{i+j}`.
    fn norm(&self, u: &TuUnder) -> TuFixed {
        let Some((m, c)) = u.leading() else {
            return LinComb::zero();
        };
        let lead = LinComb::term(m.clone(), c.clone());
        let rest = u.sub(&lead);
        let n_pow = LinComb::monomial(TuBasis::plain(self.norm_power(m)));
        let head = self.fixed_mul(&self.int_norm(c), &n_pow);
        let cross = self.tr(&under_product(&lead, &under_conj(&rest)));
        head.add(&self.norm(&rest)).add(&cross)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::{check_tambara_axioms, CheckMode};

    #[test]
    fn norm_of_x_plus_conj() {
        let r = FreeTambaraUnderlying::new();
        let u = r.under_add(&r.x(), &r.conj(&r.x()));
        assert_eq!(r.norm(&u).to_string(), "2n + t_2");
        assert_eq!(r.norm(&r.conj(&r.x())), r.n());
    }

    #[test]
    fn transfer_products() {
        let r = FreeTambaraUnderlying::new();
        assert_eq!(r.fixed_mul(&r.t_i(1), &r.t_i(1)).to_string(), "t*n + t_2");
        assert_eq!(r.fixed_mul(&r.t_i(2), &r.t_i(3)).to_string(), "t_1*n^2 + t_5");
        assert_eq!(r.fixed_mul(&r.t(), &r.t()), r.t().scale(&BigInt::from(2)));
    }

    #[test]
    fn restriction() {
        let r = FreeTambaraUnderlying::new();
        assert_eq!(r.res(&r.n()).to_string(), "x*conj(x)");
        assert_eq!(r.res(&r.t_i(2)).to_string(), "x^2 + conj(x)^2");
    }

    #[test]
    fn sampled_axioms() {
        for k in [1, 2] {
            let r = FreeTambaraUnderlying::with_generators(k);
            let report = check_tambara_axioms(&r, CheckMode::Sampled { seed: 6, count: 150 }).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}
