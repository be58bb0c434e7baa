//! Exact arithmetic substrate.
//!
//! Coefficients and exponents are arbitrary-precision rationals. Numbers of
//! the model are finite formal sums `Σ c·ε^q` in a single positive
//! infinitesimal `ε`, ordered so that lower exponents dominate.

pub(crate) mod parse;
mod series;

pub use parse::{parse_rational, parse_series, ParseSeriesError};
pub use series::{EpsSeries, Valuation};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
