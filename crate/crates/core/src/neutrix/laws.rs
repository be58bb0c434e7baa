//! Per-instance checks of the algebraic laws of external numbers.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use super::external::ExternalNumber;
use super::group::{n_scale, Neutrix};
use crate::exactnum::{EpsSeries, Rational};

pub const DEFAULT_BINOMIAL_BOUND: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("exponent {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },
}

/// Verdict plus both sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub holds: bool,
    pub left: ExternalNumber,
    pub right: ExternalNumber,
}

impl LawCheck {
    fn new(left: ExternalNumber, right: ExternalNumber) -> Self {
        LawCheck {
            holds: left == right,
            left,
            right,
        }
    }
}

/// Compares `α(β+γ)` with `αβ + αγ`.
pub fn distributivity(alpha: &ExternalNumber, beta: &ExternalNumber, gamma: &ExternalNumber) -> LawCheck {
    let left = alpha.mul(&beta.add(gamma));
    let right = alpha.mul(beta).add(&alpha.mul(gamma));
    LawCheck::new(left, right)
}

/// Compares `(α+β)ⁿ` with `Σ C(n,k) αᵏ βⁿ⁻ᵏ`, `n ≤ bound`.
pub fn binomial(
    alpha: &ExternalNumber,
    beta: &ExternalNumber,
    n: u32,
    bound: u32,
) -> Result<LawCheck, LawError> {
    if n > bound {
        return Err(LawError::BoundExceeded { n, bound });
    }
    let left = alpha.add(beta).pow(n);

    let mut alpha_pows = Vec::with_capacity(n as usize + 1);
    let mut beta_pows = Vec::with_capacity(n as usize + 1);
    alpha_pows.push(ExternalNumber::one());
    beta_pows.push(ExternalNumber::one());
    for k in 1..=n as usize {
        alpha_pows.push(alpha_pows[k - 1].mul(alpha));
        beta_pows.push(beta_pows[k - 1].mul(beta));
    }
    let mut right = ExternalNumber::zero();
    let mut coeff = BigInt::one();
    for k in 0..=n as usize {
        let c = ExternalNumber::exact(EpsSeries::constant(Rational::from_integer(coeff.clone())));
        let term = c.mul(&alpha_pows[k]).mul(&beta_pows[n as usize - k]);
        right = right.add(&term);
        coeff = coeff * BigInt::from(n as usize - k) / BigInt::from(k + 1);
    }
    Ok(LawCheck::new(left, right))
}

/// Inverse of `a` computed up to (but excluding) what `tail` absorbs.
///
/// Returns `None` for `a = 0`, and when `tail` is `Zero` while `a` has more
/// than one term, since the exact inverse then has infinite support.
pub fn truncated_inverse(a: &EpsSeries, tail: &Neutrix) -> Option<EpsSeries> {
    let (v, c) = a.leading()?.clone();
    let c_inv = Rational::one() / &c;
    if a.is_monomial() {
        return Some(EpsSeries::monomial(c_inv, -v));
    }
    if tail.is_zero() {
        return None;
    }
    // a = c·ε^v·(1 + u) with every exponent of u positive.
    let neg_v = -v.clone();
    let unit = a.shift(&neg_v).scale(&c_inv);
    let minus_u = &EpsSeries::one() - &unit;
    let keep = |t: &EpsSeries| t.retain_exponents(|e| !tail.absorbs_exponent(&(e - &v)));

    let mut sum = EpsSeries::zero();
    let mut power = EpsSeries::one();
    while !power.is_zero() {
        sum = &sum + &power;
        power = keep(&(&power * &minus_u));
    }
    Some(keep(&sum).shift(&neg_v).scale(&c_inv))
}

/// A `β` with `αβα = α` for `α` with a nonzero representative.
///
/// Built as `1/a + A/a²`, where the inverse is truncated at that neutrix.
pub fn mul_regularity_witness(alpha: &ExternalNumber) -> Option<ExternalNumber> {
    let a = alpha.rep();
    if a.is_zero() {
        return None;
    }
    // Only the valuation of 1/a² matters when scaling the neutrix.
    let v = a.leading()?.0.clone();
    let inv_sq = n_scale(
        &EpsSeries::monomial(Rational::one(), -(v.clone() + v)),
        alpha.neutrix(),
    );
    let inv = truncated_inverse(a, &inv_sq)?;
    Some(ExternalNumber::new(inv, inv_sq))
}

/// `αβα == α` for the constructed witness; `None` when no witness exists.
pub fn mul_regularity_holds(alpha: &ExternalNumber) -> Option<bool> {
    let beta = mul_regularity_witness(alpha)?;
    Some(alpha.mul(&beta).mul(alpha) == *alpha)
}

/// `α + (-α) + α == α`.
pub fn add_regularity_holds(alpha: &ExternalNumber) -> bool {
    alpha.add(&alpha.neg()).add(alpha) == *alpha
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use crate::neutrix::NeutrixKind;

    fn int(n: i64) -> ExternalNumber {
        ExternalNumber::from_int(n)
    }
    fn with(n: i64, neutrix: Neutrix) -> ExternalNumber {
        ExternalNumber::new(EpsSeries::from_int(n), neutrix)
    }

    #[test]
    fn distributivity_fails_on_cancellation() {
        let alpha = with(1, Neutrix::osl());
        let check = distributivity(&alpha, &int(1), &int(-1));
        assert!(!check.holds);
        assert_eq!(check.left, ExternalNumber::zero());
        assert_eq!(check.right, ExternalNumber::from_neutrix(Neutrix::osl()));
    }

    #[test]
    fn distributivity_in_the_exact_case() {
        let check = distributivity(&int(2), &int(5), &int(-7));
        assert!(check.holds);
        assert_eq!(check.left, int(-4));
    }

    #[test]
    fn distributivity_with_limited_groups() {
        let alpha = ExternalNumber::exact(EpsSeries::eps());
        let lim = ExternalNumber::from_neutrix(Neutrix::lim());
        let check = distributivity(&alpha, &lim, &lim);
        assert!(check.holds);
        assert_eq!(
            check.left,
            ExternalNumber::from_neutrix(Neutrix::Scaled(rat(1), NeutrixKind::Lim))
        );
    }

    #[test]
    fn binomial_small_cases() {
        let a = with(1, Neutrix::osl());
        let check = binomial(&a, &a, 2, DEFAULT_BINOMIAL_BOUND).unwrap();
        assert!(check.holds);
        assert_eq!(check.left, with(4, Neutrix::osl()));

        let x = with(5, Neutrix::lim());
        assert!(binomial(&x, &ExternalNumber::zero(), 4, DEFAULT_BINOMIAL_BOUND).unwrap().holds);

        let eps = ExternalNumber::exact(EpsSeries::eps());
        let check = binomial(&eps, &ExternalNumber::one(), 3, DEFAULT_BINOMIAL_BOUND).unwrap();
        assert!(check.holds);
        // (1 + ε)³ = 1 + 3ε + 3ε² + ε³
        let expected = EpsSeries::from_terms((0..4).map(|k| (rat(k), rat([1, 3, 3, 1][k as usize]))));
        assert_eq!(check.left, ExternalNumber::exact(expected));
    }

    #[test]
    fn binomial_bound() {
        let err = binomial(&int(1), &int(1), 9, DEFAULT_BINOMIAL_BOUND).unwrap_err();
        assert_eq!(err, LawError::BoundExceeded { n: 9, bound: 8 });
    }

    #[test]
    fn truncated_inverse_matches_product() {
        // (1 + ε)⁻¹ modulo ε³£ is 1 - ε + ε².
        let a = EpsSeries::from_terms([(rat(0), rat(1)), (rat(1), rat(1))]);
        let tail = Neutrix::Scaled(rat(3), NeutrixKind::Lim);
        let inv = truncated_inverse(&a, &tail).unwrap();
        assert_eq!(
            inv,
            EpsSeries::from_terms([(rat(0), rat(1)), (rat(1), rat(-1)), (rat(2), rat(1))])
        );
        let prod = &a * &inv;
        assert!(tail.contains(&(&prod - &EpsSeries::one())));
        assert!(truncated_inverse(&a, &Neutrix::Zero).is_none());
        assert_eq!(
            truncated_inverse(&EpsSeries::monomial(ratio(2, 3), rat(-2)), &Neutrix::Zero).unwrap(),
            EpsSeries::monomial(ratio(3, 2), rat(2))
        );
    }

    #[test]
    fn regularity_witnesses() {
        let alpha = ExternalNumber::new(
            EpsSeries::from_terms([(rat(-1), rat(3)), (ratio(1, 2), rat(-2))]),
            Neutrix::Scaled(rat(1), NeutrixKind::Osl),
        );
        assert_eq!(mul_regularity_holds(&alpha), Some(true));
        assert_eq!(mul_regularity_holds(&with(4, Neutrix::Zero)), Some(true));
        assert_eq!(mul_regularity_holds(&ExternalNumber::from_neutrix(Neutrix::osl())), None);
        assert!(add_regularity_holds(&alpha));
    }
}
