//! Membership-sampling oracle.
//!
//! External sets cannot be enumerated, so set identities are checked by
//! drawing concrete members of the operands, combining them with plain
//! series arithmetic, and testing membership of the result in the set the
//! neutrix formulas produced. Only the series field operations are shared
//! with the implementation under test.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::external::ExternalNumber;
use super::group::{Neutrix, NeutrixKind};
use crate::exactnum::{ratio, EpsSeries, Rational};

pub const DEFAULT_SAMPLES: usize = 50;

/// Offsets above a neutrix exponent used for strictly-above samples.
const OFFSETS: [(i64, i64); 6] = [(1, 1000), (1, 7), (1, 2), (1, 1), (2, 1), (5, 1)];

/// Coefficients spanning tiny to huge magnitudes of both signs.
const COEFFS: [(i64, i64); 10] = [
    (1, 1),
    (-1, 1),
    (1_000_000, 1),
    (-999_999, 1),
    (1, 1_000_000),
    (-3, 7),
    (22, 7),
    (123_456_789, 1000),
    (-5, 1),
    (1, 3),
];

fn coeff<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let &(n, d) = COEFFS.choose(rng).expect("nonempty");
    ratio(n, d)
}

fn offset<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let &(n, d) = OFFSETS.choose(rng).expect("nonempty");
    ratio(n, d)
}

/// A random member of the neutrix, concentrated near its boundary exponent.
pub fn sample_neutrix<R: Rng + ?Sized>(neutrix: &Neutrix, rng: &mut R) -> EpsSeries {
    let Neutrix::Scaled(q, kind) = neutrix else {
        return EpsSeries::zero();
    };
    if rng.gen_ratio(1, 10) {
        return EpsSeries::zero();
    }
    let lead = match kind {
        NeutrixKind::Lim => q.clone(),
        NeutrixKind::Osl => q + offset(rng),
    };
    let mut x = EpsSeries::monomial(coeff(rng), lead.clone());
    for _ in 0..rng.gen_range(0..3) {
        let e = &lead + offset(rng);
        x = &x + &EpsSeries::monomial(coeff(rng), e);
    }
    x
}

/// A random member of `α = a + A`.
pub fn sample_member<R: Rng + ?Sized>(alpha: &ExternalNumber, rng: &mut R) -> EpsSeries {
    alpha.rep() + &sample_neutrix(alpha.neutrix(), rng)
}

/// A sampled member that landed outside the claimed result set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Escape {
    pub inputs: Vec<EpsSeries>,
    pub value: EpsSeries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub samples: usize,
    pub escapes: Vec<Escape>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.escapes.is_empty()
    }
}

/// Samples `x ∈ α`, `y ∈ β` and checks `op(x, y) ∈ claimed`.
pub fn check_binary<R, F>(
    alpha: &ExternalNumber,
    beta: &ExternalNumber,
    claimed: &ExternalNumber,
    op: F,
    samples: usize,
    rng: &mut R,
) -> OracleReport
where
    R: Rng + ?Sized,
    F: Fn(&EpsSeries, &EpsSeries) -> EpsSeries,
{
    let mut escapes = Vec::new();
    for _ in 0..samples {
        let x = sample_member(alpha, rng);
        let y = sample_member(beta, rng);
        let value = op(&x, &y);
        if !claimed.contains(&value) {
            escapes.push(Escape {
                inputs: vec![x, y],
                value,
            });
        }
    }
    OracleReport { samples, escapes }
}

/// Samples members of `left` and checks they all lie in `right`.
pub fn check_subset<R: Rng + ?Sized>(
    left: &ExternalNumber,
    right: &ExternalNumber,
    samples: usize,
    rng: &mut R,
) -> OracleReport {
    let mut escapes = Vec::new();
    for _ in 0..samples {
        let x = sample_member(left, rng);
        if !right.contains(&x) {
            escapes.push(Escape {
                inputs: vec![],
                value: x,
            });
        }
    }
    OracleReport { samples, escapes }
}

/// Sampled evidence that `small ⊊ big` for two neutrices: members of
/// `small` stay in `big`, and `big` has a member outside `small`.
pub fn check_strict_inclusion<R: Rng + ?Sized>(
    small: &Neutrix,
    big: &Neutrix,
    samples: usize,
    rng: &mut R,
) -> (OracleReport, Option<EpsSeries>) {
    let report = check_subset(
        &ExternalNumber::from_neutrix(small.clone()),
        &ExternalNumber::from_neutrix(big.clone()),
        samples,
        rng,
    );
    let witness = big
        .element_outside(small)
        .filter(|w| big.contains(w) && !small.contains(w));
    (report, witness)
}
