//! Seeded random generation of external numbers for the law suites.

use rand::seq::SliceRandom;
use rand::Rng;

use super::external::ExternalNumber;
use super::group::{Neutrix, NeutrixKind};
use crate::exactnum::{ratio, EpsSeries, Rational};

const EXPONENTS: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];

fn exponent<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let &(n, d) = EXPONENTS.choose(rng).expect("nonempty");
    ratio(n, d)
}

fn coefficient<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    // Small integers dominate so that cancellations occur regularly.
    let n = loop {
        let n: i64 = rng.gen_range(-3..=3);
        if n != 0 {
            break n;
        }
    };
    if rng.gen_ratio(1, 5) {
        ratio(n, rng.gen_range(2..=5))
    } else {
        ratio(n, 1)
    }
}

pub fn random_series<R: Rng + ?Sized>(rng: &mut R, max_terms: usize) -> EpsSeries {
    let n = rng.gen_range(0..=max_terms);
    EpsSeries::from_terms((0..n).map(|_| (exponent(rng), coefficient(rng))))
}

pub fn random_neutrix<R: Rng + ?Sized>(rng: &mut R) -> Neutrix {
    if rng.gen_ratio(3, 10) {
        return Neutrix::Zero;
    }
    let kind = if rng.gen_bool(0.5) {
        NeutrixKind::Lim
    } else {
        NeutrixKind::Osl
    };
    Neutrix::Scaled(exponent(rng), kind)
}

/// A canonical external number with up to three representative terms.
pub fn random_external<R: Rng + ?Sized>(rng: &mut R) -> ExternalNumber {
    ExternalNumber::new(random_series(rng, 3), random_neutrix(rng))
}

/// A random external number that is not reduced to a neutrix.
pub fn random_non_neutrix<R: Rng + ?Sized>(rng: &mut R) -> ExternalNumber {
    loop {
        let x = random_external(rng);
        if !x.is_neutrix() {
            return x;
        }
    }
}
