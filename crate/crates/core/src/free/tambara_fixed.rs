//! The free Tambara functor on fixed-level generators `x_1..x_k`.
//!
//! Fixed level `A[x, n]/(t(x² − n))` with `n = N(res x)`: basis `xᵃnᵇ` and
//! `t·xᵉnᵇ` with every `eᵢ ≤ 1` (the relation `t·x² = t·n` is applied until
//! it no longer fires). Underlying level `Z[x]` with trivial conjugation.

use num_bigint::BigInt;
use rand::RngCore;

use super::lincomb::{power_factor, random_lincomb, LinComb, Monomial};
use super::{
    generator_names, norm_names, random_exps, under_product, UMono, SAMPLE_COEFF, SAMPLE_DEGREE, SAMPLE_TERMS,
};
use crate::burnside::Burnside;
use crate::functor::{sample_index, GreenFunctor, TambaraFunctor};

/// `xᵃnᵇ` or `t·xᵉnᵇ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TfBasis {
    pub deg: u32,
    pub t: bool,
    pub x: Vec<u32>,
    pub n: Vec<u32>,
}

impl TfBasis {
    /// Build a monomial, reducing `t·x²` to `t·n`.
    pub fn new(t: bool, mut x: Vec<u32>, mut n: Vec<u32>) -> Self {
        if t {
            for (xi, ni) in x.iter_mut().zip(n.iter_mut()) {
                *ni += *xi / 2;
                *xi %= 2;
            }
        }
        let deg = x.iter().sum::<u32>() + 2 * n.iter().sum::<u32>();
        TfBasis { deg, t, x, n }
    }

    pub fn gens(&self) -> usize {
        self.x.len()
    }
}

impl Monomial for TfBasis {
    fn render(&self) -> String {
        let k = self.gens();
        let mut parts: Vec<String> = Vec::new();
        if self.t {
            parts.push("t".into());
        }
        for (name, &e) in generator_names(k).iter().zip(&self.x) {
            parts.extend(power_factor(name, e));
        }
        for (name, &e) in norm_names(k).iter().zip(&self.n) {
            parts.extend(power_factor(name, e));
        }
        parts.join("*")
    }
}

pub type TfFixed = LinComb<TfBasis>;
pub type TfUnder = LinComb<UMono>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeTambaraFixed {
    gens: usize,
}

impl Default for FreeTambaraFixed {
    fn default() -> Self {
        FreeTambaraFixed::new()
    }
}

impl FreeTambaraFixed {
    pub fn new() -> Self {
        FreeTambaraFixed { gens: 1 }
    }

    pub fn with_generators(gens: usize) -> Self {
        FreeTambaraFixed { gens }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    fn unit_vec(&self, i: usize, e: u32) -> Vec<u32> {
        let mut v = vec![0; self.gens];
        v[i] = e;
        v
    }

    pub fn x_i(&self, i: usize) -> TfFixed {
        LinComb::monomial(TfBasis::new(false, self.unit_vec(i, 1), vec![0; self.gens]))
    }

    pub fn n_i(&self, i: usize) -> TfFixed {
        LinComb::monomial(TfBasis::new(false, vec![0; self.gens], self.unit_vec(i, 1)))
    }

    pub fn x(&self) -> TfFixed {
        self.x_i(0)
    }

    pub fn n(&self) -> TfFixed {
        self.n_i(0)
    }

    /// Basis monomials of degree at most `max_deg` (one generator).
    pub fn basis(max_deg: u32) -> Vec<TfBasis> {
        let mut out = Vec::new();
        for b in 0..=max_deg / 2 {
            for a in 0..=max_deg - 2 * b {
                out.push(TfBasis::new(false, vec![a], vec![b]));
            }
            for e in 0..=1 {
                if e + 2 * b <= max_deg {
                    out.push(TfBasis::new(true, vec![e], vec![b]));
                }
            }
        }
        out.sort();
        out
    }

    pub fn under_basis(max_deg: u32) -> Vec<UMono> {
        (0..=max_deg).map(|d| UMono::single(d, 0)).collect()
    }

    fn one_basis(&self) -> TfBasis {
        TfBasis::new(false, vec![0; self.gens], vec![0; self.gens])
    }

    /// `N(c)` for an integer `c`, embedded via the Burnside ring.
    fn int_norm(&self, c: &BigInt) -> TfFixed {
        let b = Burnside.norm(c);
        LinComb::term(self.one_basis(), b.a)
            .add(&LinComb::term(TfBasis::new(true, vec![0; self.gens], vec![0; self.gens]), b.b))
    }
}

fn basis_mul(a: &TfBasis, b: &TfBasis) -> TfFixed {
    let m = TfBasis::new(a.t || b.t, super::add_exps(&a.x, &b.x), super::add_exps(&a.n, &b.n));
    LinComb::term(m, if a.t && b.t { 2 } else { 1 })
}

impl GreenFunctor for FreeTambaraFixed {
    type Fixed = TfFixed;
    type Under = TfUnder;

    fn fixed_zero(&self) -> TfFixed {
        LinComb::zero()
    }
    fn fixed_one(&self) -> TfFixed {
        LinComb::monomial(self.one_basis())
    }
    fn fixed_add(&self, a: &TfFixed, b: &TfFixed) -> TfFixed {
        a.add(b)
    }
    fn fixed_neg(&self, a: &TfFixed) -> TfFixed {
        a.neg()
    }
    fn fixed_mul(&self, a: &TfFixed, b: &TfFixed) -> TfFixed {
        a.mul_with(b, basis_mul)
    }
    fn under_zero(&self) -> TfUnder {
        LinComb::zero()
    }
    fn under_one(&self) -> TfUnder {
        LinComb::monomial(UMono::one(self.gens))
    }
    fn under_add(&self, a: &TfUnder, b: &TfUnder) -> TfUnder {
        a.add(b)
    }
    fn under_neg(&self, a: &TfUnder) -> TfUnder {
        a.neg()
    }
    fn under_mul(&self, a: &TfUnder, b: &TfUnder) -> TfUnder {
        under_product(a, b)
    }
    fn conj(&self, x: &TfUnder) -> TfUnder {
        x.clone()
    }
    fn res(&self, a: &TfFixed) -> TfUnder {
        a.map_linear(|b| {
            let x = b.x.iter().zip(&b.n).map(|(x, n)| x + 2 * n).collect();
            LinComb::term(UMono::new(x, vec![0; self.gens]), if b.t { 2 } else { 1 })
        })
    }
    fn tr(&self, x: &TfUnder) -> TfFixed {
        x.map_linear(|m| LinComb::monomial(TfBasis::new(true, m.x.clone(), vec![0; self.gens])))
    }
    fn sample_fixed(&self, rng: &mut dyn RngCore) -> TfFixed {
        let k = self.gens;
        random_lincomb(rng, SAMPLE_TERMS, SAMPLE_COEFF, |rng| {
            let t = sample_index(rng, 2) == 1;
            let n = random_exps(rng, k, SAMPLE_DEGREE / 2);
            let x = if t {
                (0..k).map(|_| sample_index(rng, 2) as u32).collect()
            } else {
                random_exps(rng, k, SAMPLE_DEGREE)
            };
            TfBasis::new(t, x, n)
        })
    }
    fn sample_under(&self, rng: &mut dyn RngCore) -> TfUnder {
        super::random_under(rng, self.gens, false)
    }
    fn show_fixed(&self, a: &TfFixed) -> String {
        a.to_string()
    }
    fn show_under(&self, x: &TfUnder) -> String {
        x.to_string()
    }
    fn fixed_int(&self, k: &BigInt) -> TfFixed {
        self.fixed_one().scale(k)
    }
    fn under_int(&self, k: &BigInt) -> TfUnder {
        self.under_one().scale(k)
    }
}

impl TambaraFunctor for FreeTambaraFixed {
    /// Peel off the leading term `c·xᵅ` and recurse:
    /// `N(c·xᵅ + p) = N(c)·nᵅ + N(p) + tr(c·xᵅ·p)`.
    fn norm(&self, u: &TfUnder) -> TfFixed {
        let Some((m, c)) = u.leading() else {
            return LinComb::zero();
        };
        let lead = LinComb::term(m.clone(), c.clone());
        let rest = u.sub(&lead);
        let n_pow = LinComb::monomial(TfBasis::new(false, vec![0; self.gens], m.x.clone()));
        let head = self.fixed_mul(&self.int_norm(c), &n_pow);
        let cross = self.tr(&under_product(&lead, &rest));
        head.add(&self.norm(&rest)).add(&cross)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::{check_tambara_axioms, CheckMode};

    fn poly(r: &FreeTambaraFixed, cs: &[i64]) -> TfUnder {
        let _ = r;
        LinComb::from_terms(cs.iter().enumerate().map(|(i, &c)| (UMono::single(i as u32, 0), BigInt::from(c))))
    }

    #[test]
    fn transfer_reduces() {
        let r = FreeTambaraFixed::new();
        assert_eq!(r.tr(&poly(&r, &[0, 0, 0, 1])).to_string(), "t*x*n");
        assert_eq!(r.tr(&poly(&r, &[0, 0, 1])).to_string(), "t*n");
        assert_eq!(r.fixed_mul(&r.t(), &r.fixed_mul(&r.x(), &r.x())), r.fixed_mul(&r.t(), &r.n()));
    }

    #[test]
    fn norms() {
        let r = FreeTambaraFixed::new();
        assert_eq!(r.norm(&poly(&r, &[0, 1])), r.n());
        assert_eq!(r.norm(&poly(&r, &[1, 1])).to_string(), "1 + t*x + n");
        assert_eq!(r.norm(&poly(&r, &[])), r.fixed_zero());
        assert_eq!(r.norm(&poly(&r, &[-1])).to_string(), "-1 + t");
    }

    #[test]
    fn sampled_axioms() {
        for k in [1, 2] {
            let r = FreeTambaraFixed::with_generators(k);
            let report = check_tambara_axioms(&r, CheckMode::Sampled { seed: 5, count: 150 }).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}
