//! The Burnside Tambara functor of C2.
//!
//! The fixed level is the Burnside ring `Z{1, t}` with `t = [C2]` and
//! `t² = 2t`; the underlying level is `Z`, the Burnside ring of the trivial
//! group. Restriction forgets the action, transfer induces, and the norm is
//! coinduction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::RngCore;

use crate::functor::{sample_int, GreenFunctor, TambaraFunctor};

/// `a·1 + b·t` in the Burnside ring of C2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BurnsideElement {
    pub a: BigInt,
    pub b: BigInt,
}

impl BurnsideElement {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        BurnsideElement { a: a.into(), b: b.into() }
    }

    pub fn t() -> Self {
        BurnsideElement::new(0, 1)
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_burnside(&self.a, &self.b))
    }
}

/// Render `a + b·t` with constants first, e.g. `2 + t`, `-1 + t`, `3t`.
pub(crate) fn render_burnside(a: &BigInt, b: &BigInt) -> String {
    let mut terms: Vec<(BigInt, String)> = Vec::new();
    if !a.is_zero() {
        terms.push((a.clone(), String::new()));
    }
    if !b.is_zero() {
        terms.push((b.clone(), "t".into()));
    }
    crate::free::lincomb::render_terms(&terms)
}

/// The Burnside Tambara functor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Burnside;

/// Coinduction on a non-negative integer: `Map(C2, m)` has `m` fixed points
/// and `(m² − m)/2` free orbits.
fn norm_of_natural(m: &BigInt) -> BurnsideElement {
    debug_assert!(!m.is_negative());
    let free = (m * m - m).div_floor(&BigInt::from(2));
    BurnsideElement::new(m.clone(), free)
}

impl GreenFunctor for Burnside {
    type Fixed = BurnsideElement;
    type Under = BigInt;

    fn fixed_zero(&self) -> BurnsideElement {
        BurnsideElement::default()
    }

    fn fixed_one(&self) -> BurnsideElement {
        BurnsideElement::new(1, 0)
    }

    fn fixed_add(&self, x: &BurnsideElement, y: &BurnsideElement) -> BurnsideElement {
        BurnsideElement { a: &x.a + &y.a, b: &x.b + &y.b }
    }

    fn fixed_neg(&self, x: &BurnsideElement) -> BurnsideElement {
        BurnsideElement { a: -&x.a, b: -&x.b }
    }

    fn fixed_mul(&self, x: &BurnsideElement, y: &BurnsideElement) -> BurnsideElement {
        // (a + bt)(c + dt) = ac + (ad + bc + 2bd)t
        BurnsideElement { a: &x.a * &y.a, b: &x.a * &y.b + &x.b * &y.a + BigInt::from(2) * &x.b * &y.b }
    }

    fn under_zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn under_one(&self) -> BigInt {
        BigInt::one()
    }

    fn under_add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }

    fn under_neg(&self, x: &BigInt) -> BigInt {
        -x
    }

    fn under_mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }

    fn conj(&self, x: &BigInt) -> BigInt {
        x.clone()
    }

    fn res(&self, x: &BurnsideElement) -> BigInt {
        &x.a + BigInt::from(2) * &x.b
    }

    fn tr(&self, m: &BigInt) -> BurnsideElement {
        BurnsideElement::new(0, m.clone())
    }

    fn sample_fixed(&self, rng: &mut dyn RngCore) -> BurnsideElement {
        BurnsideElement::new(sample_int(rng, -20, 20), sample_int(rng, -20, 20))
    }

    fn sample_under(&self, rng: &mut dyn RngCore) -> BigInt {
        sample_int(rng, -20, 20)
    }

    fn show_fixed(&self, a: &BurnsideElement) -> String {
        a.to_string()
    }

    fn show_under(&self, x: &BigInt) -> String {
        x.to_string()
    }

    fn fixed_int(&self, k: &BigInt) -> BurnsideElement {
        BurnsideElement::new(k.clone(), 0)
    }

    fn under_int(&self, k: &BigInt) -> BigInt {
        k.clone()
    }
}

impl TambaraFunctor for Burnside {
    /// Non-negative integers are coinduced; negatives are reached from
    /// `0 = N(m + (−m)) = N(m) + N(−m) + tr(−m²)`.
    fn norm(&self, m: &BigInt) -> BurnsideElement {
        if !m.is_negative() {
            norm_of_natural(m)
        } else {
            let pos = norm_of_natural(&-m);
            self.fixed_add(&self.fixed_neg(&pos), &self.tr(&(m * m)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::{check_tambara_axioms, CheckMode};

    fn b(a: i64, t: i64) -> BurnsideElement {
        BurnsideElement::new(a, t)
    }

    #[test]
    fn closed_forms() {
        let r = Burnside;
        assert_eq!(r.fixed_mul(&BurnsideElement::t(), &BurnsideElement::t()), b(0, 2));
        assert_eq!(r.tr(&BigInt::one()), BurnsideElement::t());
        assert_eq!(r.norm(&BigInt::from(2)), b(2, 1));
        assert_eq!(r.norm(&BigInt::from(-1)), b(-1, 1));
        assert_eq!(r.norm(&BigInt::zero()), b(0, 0));
        assert_eq!(r.res(&BurnsideElement::t()), BigInt::from(2));
    }

    #[test]
    fn negative_norms_agree_with_the_quadratic_formula() {
        let r = Burnside;
        for m in -30i64..=30 {
            let expected = b(m, (m * m - m) / 2);
            assert_eq!(r.norm(&BigInt::from(m)), expected, "m = {m}");
        }
    }

    #[test]
    fn sampled_axioms_pass() {
        let report = check_tambara_axioms(&Burnside, CheckMode::Sampled { seed: 0, count: 200 }).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn rendering() {
        assert_eq!(b(2, 1).to_string(), "2 + t");
        assert_eq!(b(-1, 1).to_string(), "-1 + t");
        assert_eq!(b(0, 0).to_string(), "0");
        assert_eq!(b(0, -3).to_string(), "-3t");
    }
}
