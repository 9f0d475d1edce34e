//! Finite integer linear combinations over an ordered monomial basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::RngCore;

use crate::functor::{sample_index, sample_int};

/// A basis monomial. The derived order is the printing order, so basis
/// types put the degree first to get degree-lexicographic output.
pub trait Monomial: Clone + Ord + fmt::Debug {
    /// ASCII rendering; empty for the unit monomial.
    fn render(&self) -> String;
}

/// `Σ cᵢ·bᵢ` with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Monomial> LinComb<B> {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn term(b: B, c: impl Into<BigInt>) -> Self {
        let mut out = LinComb::zero();
        out.add_term(b, c.into());
        out
    }

    pub fn monomial(b: B) -> Self {
        LinComb::term(b, BigInt::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, BigInt)>) -> Self {
        let mut out = LinComb::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// The largest monomial in the printing order, with its coefficient.
    pub fn leading(&self) -> Option<(&B, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, b: B, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(b.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, c)| (b.clone(), c * k)).collect() }
    }

    /// Bilinear extension of a product on basis monomials.
    pub fn mul_with(&self, other: &Self, prod: impl Fn(&B, &B) -> LinComb<B>) -> Self {
        let mut out = LinComb::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let cd = c * d;
                for (m, e) in prod(a, b).terms {
                    out.add_term(m, e * &cd);
                }
            }
        }
        out
    }

    /// Linear extension of a map on basis monomials.
    pub fn map_linear<C: Monomial>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (m, e) in f(b).terms {
                out.add_term(m, e * c);
            }
        }
        out
    }

    /// Linear extension into an arbitrary additive group.
    pub fn fold_linear<T>(
        &self,
        zero: T,
        image: impl Fn(&B) -> T,
        add: impl Fn(&T, &T) -> T,
        scale: impl Fn(&BigInt, &T) -> T,
    ) -> T {
        self.terms.iter().fold(zero, |acc, (b, c)| add(&acc, &scale(c, &image(b))))
    }
}

impl<B: Monomial> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(BigInt, String)> = self.terms.iter().map(|(b, c)| (c.clone(), b.render())).collect();
        f.write_str(&render_terms(&terms))
    }
}

/// Render `c₁m₁ + c₂m₂ + …` with juxtaposed coefficients, unit coefficients
/// omitted, and `0` for the empty sum.
pub fn render_terms(terms: &[(BigInt, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, m)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(m);
        }
    }
    out
}

/// A random combination of up to `max_terms` monomials with coefficients
/// in `[-coeff, coeff]`.
pub fn random_lincomb<B: Monomial>(
    rng: &mut dyn RngCore,
    max_terms: usize,
    coeff: i64,
    mut basis: impl FnMut(&mut dyn RngCore) -> B,
) -> LinComb<B> {
    let n = sample_index(rng, max_terms + 1);
    let mut out = LinComb::zero();
    for _ in 0..n {
        let b = basis(rng);
        let c = sample_int(rng, -coeff, coeff);
        out.add_term(b, c);
    }
    out
}

/// Render `name^e`, omitting exponent 1 and the factor for exponent 0.
pub(crate) fn power_factor(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct X(u32);

    impl Monomial for X {
        fn render(&self) -> String {
            power_factor("x", self.0).unwrap_or_default()
        }
    }

    fn poly(cs: &[i64]) -> LinComb<X> {
        LinComb::from_terms(cs.iter().enumerate().map(|(i, &c)| (X(i as u32), BigInt::from(c))))
    }

    fn mul(a: &LinComb<X>, b: &LinComb<X>) -> LinComb<X> {
        a.mul_with(b, |p, q| LinComb::monomial(X(p.0 + q.0)))
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[1, -1, 2]).to_string(), "1 - x + 2x^2");
        assert_eq!(poly(&[0, -1]).to_string(), "-x");
        assert_eq!(poly(&[-3]).to_string(), "-3");
    }

    #[test]
    fn zero_terms_vanish() {
        let p = poly(&[1, 2]);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.scale(&BigInt::zero()), LinComb::zero());
        assert_eq!(poly(&[0, 0, 0]).len(), 0);
    }

    #[test]
    fn products() {
        // (1 + x)(1 - x) = 1 - x²
        assert_eq!(mul(&poly(&[1, 1]), &poly(&[1, -1])), poly(&[1, 0, -1]));
        assert_eq!(poly(&[0, 0, 5]).leading(), Some((&X(2), &BigInt::from(5))));
    }
}
