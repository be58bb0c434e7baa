use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::exactnum::{ratio, Rational};

/// Truth-value algebra shared by the evaluators.
pub trait TruthAlgebra: Clone + PartialEq + fmt::Debug {
    fn top() -> Self;
    fn bottom() -> Self;
    fn not(&self) -> Self;
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn implies(&self, other: &Self) -> Self {
        self.not().or(other)
    }
    fn iff(&self, other: &Self) -> Self {
        self.implies(other).and(&other.implies(self))
    }
}

impl TruthAlgebra for bool {
    fn top() -> Self {
        true
    }
    fn bottom() -> Self {
        false
    }
    fn not(&self) -> Self {
        !*self
    }
    fn and(&self, other: &Self) -> Self {
        *self && *other
    }
    fn or(&self, other: &Self) -> Self {
        *self || *other
    }
    fn iff(&self, other: &Self) -> Self {
        self == other
    }
}

/// Kleene's three values, ordered `0 < 1/2 < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue3 {
    False,
    Half,
    True,
}

impl TruthValue3 {
    pub const ALL: [TruthValue3; 3] = [TruthValue3::False, TruthValue3::Half, TruthValue3::True];

    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue3::True
        } else {
            TruthValue3::False
        }
    }

    pub fn to_degree(self) -> FuzzyDegree {
        FuzzyDegree(match self {
            TruthValue3::False => Rational::zero(),
            TruthValue3::Half => ratio(1, 2),
            TruthValue3::True => Rational::one(),
        })
    }
}

/// Strong Kleene connectives: `∧ = min`, `∨ = max`, `¬` swaps `0` and `1`.
impl TruthAlgebra for TruthValue3 {
    fn top() -> Self {
        TruthValue3::True
    }
    fn bottom() -> Self {
        TruthValue3::False
    }
    fn not(&self) -> Self {
        match self {
            TruthValue3::False => TruthValue3::True,
            TruthValue3::Half => TruthValue3::Half,
            TruthValue3::True => TruthValue3::False,
        }
    }
    fn and(&self, other: &Self) -> Self {
        *self.min(other)
    }
    fn or(&self, other: &Self) -> Self {
        *self.max(other)
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::False => "0",
            TruthValue3::Half => "1/2",
            TruthValue3::True => "1",
        })
    }
}

impl Serialize for TruthValue3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Degree of truth in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuzzyDegree(Rational);

impl FuzzyDegree {
    pub fn new(d: Rational) -> Option<Self> {
        (d >= Rational::zero() && d <= Rational::one()).then_some(FuzzyDegree(d))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn one() -> Self {
        FuzzyDegree(Rational::one())
    }

    pub fn zero() -> Self {
        FuzzyDegree(Rational::zero())
    }
}

/// Zadeh connectives with the implication `max(1 - x, y)`.
impl TruthAlgebra for FuzzyDegree {
    fn top() -> Self {
        FuzzyDegree::one()
    }
    fn bottom() -> Self {
        FuzzyDegree::zero()
    }
    fn not(&self) -> Self {
        FuzzyDegree(Rational::one() - &self.0)
    }
    fn and(&self, other: &Self) -> Self {
        self.clone().min(other.clone())
    }
    fn or(&self, other: &Self) -> Self {
        self.clone().max(other.clone())
    }
}

impl fmt::Display for FuzzyDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for FuzzyDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
