use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{rat, EpsSeries, Rational, Valuation};
use crate::logic::{eval_super, Domains, Formula, FuzzyDegree, PrecisificationFamily, SuperVerdict, TruthAlgebra, TruthValue3};
use crate::neutrix::{ExternalNumber, SetRelation};

/// A position in the series: a naive natural, or an unlimited witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelInteger {
    Naive(i64),
    Witness(EpsSeries),
}

impl ModelInteger {
    /// `None` unless the series is unlimited.
    pub fn witness(s: EpsSeries) -> Option<Self> {
        matches!(s.valuation(), Valuation::Finite(v) if v < Rational::zero()).then_some(ModelInteger::Witness(s))
    }

    pub fn is_standard(&self) -> bool {
        matches!(self, ModelInteger::Naive(_))
    }

    pub fn to_series(&self) -> EpsSeries {
        match self {
            ModelInteger::Naive(n) => EpsSeries::from_int(*n),
            ModelInteger::Witness(s) => s.clone(),
        }
    }

    pub fn offset(&self, k: i64) -> Self {
        match self {
            ModelInteger::Naive(n) => ModelInteger::Naive(n + k),
            ModelInteger::Witness(s) => ModelInteger::Witness(s + &EpsSeries::from_int(k)),
        }
    }

    pub fn double(&self) -> Self {
        match self {
            ModelInteger::Naive(n) => ModelInteger::Naive(2 * n),
            ModelInteger::Witness(s) => ModelInteger::Witness(s.scale(&rat(2))),
        }
    }
}

impl fmt::Display for ModelInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelInteger::Naive(n) => write!(f, "{n}"),
            ModelInteger::Witness(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for ModelInteger {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn default_witnesses() -> Vec<EpsSeries> {
    let w = EpsSeries::omega();
    vec![w.clone(), w.pow(2), &w + &EpsSeries::from_int(7)]
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("range must satisfy 0 <= lo < hi, got {0}..{1}")]
    Range(i64, i64),
    #[error("penumbra bounds must satisfy t1 <= t2, got {0} > {1}")]
    Penumbra(i64, i64),
    #[error("{0}")]
    Membership(String),
    #[error("witness `{0}` is not unlimited")]
    Witness(String),
    #[error("chain length {length} does not fit the range {lo}..{hi}")]
    ChainLength { length: i64, lo: i64, hi: i64 },
}

/// Piecewise-linear membership through rational breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyMembership {
    breakpoints: Vec<(i64, Rational)>,
    threshold: Rational,
}

impl FuzzyMembership {
    /// Breakpoints need strictly increasing positions and degrees in `[0, 1]`;
    /// the threshold must lie in `(1/2, 1]`.
    pub fn new(breakpoints: Vec<(i64, Rational)>, threshold: Rational) -> Result<Self, ModelError> {
        if breakpoints.is_empty() {
            return Err(ModelError::Membership("at least one breakpoint is required".into()));
        }
        if breakpoints.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(ModelError::Membership("breakpoint positions must increase".into()));
        }
        if let Some((n, _)) = breakpoints.iter().find(|(_, d)| FuzzyDegree::new(d.clone()).is_none()) {
            return Err(ModelError::Membership(format!("degree at {n} is outside [0, 1]")));
        }
        if threshold <= Rational::new(1.into(), 2.into()) || threshold > Rational::one() {
            return Err(ModelError::Membership("threshold must lie in (1/2, 1]".into()));
        }
        Ok(FuzzyMembership { breakpoints, threshold })
    }

    /// Falls linearly from 1 at `lo` to 0 at `hi`.
    pub fn linear(lo: i64, hi: i64) -> Self {
        FuzzyMembership {
            breakpoints: vec![(lo, Rational::one()), (hi, Rational::zero())],
            threshold: Rational::one(),
        }
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    pub fn breakpoints(&self) -> &[(i64, Rational)] {
        &self.breakpoints
    }

    /// Constant beyond the outermost breakpoints.
    pub fn degree(&self, n: i64) -> FuzzyDegree {
        let bp = &self.breakpoints;
        let d = if n <= bp[0].0 {
            bp[0].1.clone()
        } else if n >= bp[bp.len() - 1].0 {
            bp[bp.len() - 1].1.clone()
        } else {
            let i = bp.iter().position(|(x, _)| *x > n).unwrap_or(bp.len() - 1);
            let ((x0, y0), (x1, y1)) = (&bp[i - 1], &bp[i]);
            y0 + (y1 - y0) * Rational::new((n - x0).into(), (x1 - x0).into())
        };
        FuzzyDegree::new(d).expect("interpolation stays in [0, 1]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    /// `S(x)` iff `x` is limited.
    Limited,
    /// `S(x)` iff `x` lies entirely below the external number.
    Cut(ExternalNumber),
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Limited => f.write_str("£"),
            Threshold::Cut(a) => write!(f, "x < {a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    ClassicalCutoff(i64),
    KleenePenumbra(i64, i64),
    FuzzyMembership(FuzzyMembership),
    Superval(PrecisificationFamily),
    Nonstandard(Threshold),
}

impl Backend {
    pub fn id(&self) -> String {
        match self {
            Backend::ClassicalCutoff(k) => format!("classical_cutoff({k})"),
            Backend::KleenePenumbra(a, b) => format!("kleene_penumbra({a}, {b})"),
            Backend::FuzzyMembership(m) => {
                let pts: Vec<String> = m.breakpoints.iter().map(|(n, d)| format!("{n}:{d}")).collect();
                format!("fuzzy_membership([{}], threshold {})", pts.join(", "), m.threshold)
            }
            Backend::Superval(fam) => {
                let ks: Vec<String> = fam.cutoffs().map(|k| k.to_string()).collect();
                format!("supervaluation({{{}}})", ks.join(", "))
            }
            Backend::Nonstandard(t) => format!("nonstandard({t})"),
        }
    }
}

/// Truth value of a single atom or conditional under some backend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Classical(bool),
    Kleene(TruthValue3),
    Fuzzy(FuzzyDegree),
    Super(SuperVerdict),
    Member(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Designation {
    True,
    False,
    Neither,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Classical(b) | Value::Member(b) => write!(f, "{b}"),
            Value::Kleene(v) => write!(f, "{v}"),
            Value::Fuzzy(d) => write!(f, "{d}"),
            Value::Super(SuperVerdict::Supertrue) => f.write_str("supertrue"),
            Value::Super(SuperVerdict::Superfalse) => f.write_str("superfalse"),
            Value::Super(SuperVerdict::Indeterminate) => f.write_str("indeterminate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub range: (i64, i64),
    pub backend: Backend,
    pub witnesses: Vec<EpsSeries>,
    pub chain_length: ModelInteger,
}

impl Scenario {
    /// Validates the range, backend bounds, witnesses and chain length.
    pub fn new(
        name: impl Into<String>,
        range: (i64, i64),
        backend: Backend,
        witnesses: Vec<EpsSeries>,
        chain_length: Option<ModelInteger>,
    ) -> Result<Self, ModelError> {
        let (lo, hi) = range;
        if lo < 0 || lo >= hi {
            return Err(ModelError::Range(lo, hi));
        }
        if let Backend::KleenePenumbra(t1, t2) = backend {
            if t1 > t2 {
                return Err(ModelError::Penumbra(t1, t2));
            }
        }
        if let Some(w) = witnesses.iter().find(|w| ModelInteger::witness((*w).clone()).is_none()) {
            return Err(ModelError::Witness(w.to_string()));
        }
        let chain_length = chain_length.unwrap_or(ModelInteger::Naive(hi - lo + 1));
        if let ModelInteger::Naive(length) = chain_length {
            if length < 1 || lo + length - 1 > hi {
                return Err(ModelError::ChainLength { length, lo, hi });
            }
        }
        Ok(Scenario {
            name: name.into(),
            range,
            backend,
            witnesses,
            chain_length,
        })
    }

    pub fn witness_values(&self) -> Vec<ModelInteger> {
        self.witnesses.iter().cloned().map(ModelInteger::Witness).collect()
    }

    /// `S(x)`; `None` for witnesses under backends without an unlimited model.
    pub fn value(&self, x: &ModelInteger) -> Option<Value> {
        if let Backend::Nonstandard(t) = &self.backend {
            let x = ExternalNumber::exact(x.to_series());
            return Some(Value::Member(match t {
                Threshold::Limited => x.is_limited(),
                Threshold::Cut(alpha) => x.relate(alpha) == SetRelation::DisjointLess,
            }));
        }
        let ModelInteger::Naive(n) = *x else {
            return None;
        };
        Some(match &self.backend {
            Backend::ClassicalCutoff(k) => Value::Classical(n < *k),
            Backend::KleenePenumbra(t1, t2) => Value::Kleene(if n < *t1 {
                TruthValue3::True
            } else if n <= *t2 {
                TruthValue3::Half
            } else {
                TruthValue3::False
            }),
            Backend::FuzzyMembership(m) => Value::Fuzzy(m.degree(n)),
            Backend::Superval(fam) => Value::Super(
                eval_super(&Formula::atom("S", n), fam, &Domains::new()).expect("ground atom"),
            ),
            Backend::Nonstandard(_) => unreachable!(),
        })
    }

    /// `S(a) -> S(b)`.
    pub fn conditional(&self, a: &ModelInteger, b: &ModelInteger) -> Option<Value> {
        if let (Backend::Superval(fam), ModelInteger::Naive(m), ModelInteger::Naive(n)) = (&self.backend, a, b) {
            let f = Formula::implies(Formula::atom("S", *m), Formula::atom("S", *n));
            return Some(Value::Super(eval_super(&f, fam, &Domains::new()).expect("ground formula")));
        }
        Some(match (self.value(a)?, self.value(b)?) {
            (Value::Classical(p), Value::Classical(q)) => Value::Classical(p.implies(&q)),
            (Value::Member(p), Value::Member(q)) => Value::Member(p.implies(&q)),
            (Value::Kleene(p), Value::Kleene(q)) => Value::Kleene(p.implies(&q)),
            (Value::Fuzzy(p), Value::Fuzzy(q)) => Value::Fuzzy(p.implies(&q)),
            _ => return None,
        })
    }

    pub fn designation(&self, v: &Value) -> Designation {
        let from_bool = |b: bool| if b { Designation::True } else { Designation::False };
        match v {
            Value::Classical(b) | Value::Member(b) => from_bool(*b),
            Value::Kleene(TruthValue3::True) | Value::Super(SuperVerdict::Supertrue) => Designation::True,
            Value::Kleene(TruthValue3::False) | Value::Super(SuperVerdict::Superfalse) => Designation::False,
            Value::Kleene(_) | Value::Super(_) => Designation::Neither,
            Value::Fuzzy(d) => {
                let t = match &self.backend {
                    Backend::FuzzyMembership(m) => m.threshold.clone(),
                    _ => Rational::one(),
                };
                if *d.value() >= t {
                    Designation::True
                } else if *d.value() <= Rational::one() - t {
                    Designation::False
                } else {
                    Designation::Neither
                }
            }
        }
    }

    pub fn designated_true(&self, v: &Value) -> bool {
        self.designation(v) == Designation::True
    }

    pub fn designated_false(&self, v: &Value) -> bool {
        self.designation(v) == Designation::False
    }
}
