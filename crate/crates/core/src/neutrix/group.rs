use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::exactnum::{EpsSeries, Rational, Valuation};

/// Size class of a scaled neutrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NeutrixKind {
    /// `ε^q·⊘`: valuation strictly above `q`.
    Osl,
    /// `ε^q·£`: valuation at least `q`.
    Lim,
}

/// A convex additive subgroup of the series model.
///
/// Only valuation-definable groups are representable: `{0}`, and the
/// scaled limited / infinitesimal groups at a rational exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Neutrix {
    Zero,
    Scaled(Rational, NeutrixKind),
}

impl Neutrix {
    /// `⊘`, the infinitesimals.
    pub fn osl() -> Self {
        Neutrix::Scaled(Rational::zero(), NeutrixKind::Osl)
    }

    /// `£`, the limited numbers.
    pub fn lim() -> Self {
        Neutrix::Scaled(Rational::zero(), NeutrixKind::Lim)
    }

    pub fn scaled(q: Rational, kind: NeutrixKind) -> Self {
        Neutrix::Scaled(q, kind)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Neutrix::Zero)
    }

    pub fn kind(&self) -> Option<NeutrixKind> {
        match self {
            Neutrix::Zero => None,
            Neutrix::Scaled(_, k) => Some(*k),
        }
    }

    pub fn exponent(&self) -> Option<&Rational> {
        match self {
            Neutrix::Zero => None,
            Neutrix::Scaled(q, _) => Some(q),
        }
    }

    /// Whether a monomial `c·ε^exponent` (with `c ≠ 0`) lies in the group.
    pub fn absorbs_exponent(&self, exponent: &Rational) -> bool {
        match self {
            Neutrix::Zero => false,
            Neutrix::Scaled(q, NeutrixKind::Lim) => exponent >= q,
            Neutrix::Scaled(q, NeutrixKind::Osl) => exponent > q,
        }
    }

    pub fn contains(&self, x: &EpsSeries) -> bool {
        match x.valuation() {
            Valuation::PosInfinity => true,
            Valuation::Finite(v) => self.absorbs_exponent(&v),
        }
    }

    /// Inclusion order; total on representable neutrices.
    pub fn inclusion_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Neutrix::Zero, Neutrix::Zero) => Ordering::Equal,
            (Neutrix::Zero, _) => Ordering::Less,
            (_, Neutrix::Zero) => Ordering::Greater,
            (Neutrix::Scaled(q, k), Neutrix::Scaled(r, l)) => r.cmp(q).then(k.cmp(l)),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.inclusion_cmp(other) != Ordering::Greater
    }

    pub fn is_proper_subset_of(&self, other: &Self) -> bool {
        self.inclusion_cmp(other) == Ordering::Less
    }

    /// A nonzero element of `self` outside `smaller`, when one exists.
    pub fn element_outside(&self, smaller: &Self) -> Option<EpsSeries> {
        if !smaller.is_proper_subset_of(self) {
            return None;
        }
        let Neutrix::Scaled(q, kind) = self else {
            return None;
        };
        let exponent = match (kind, smaller) {
            (NeutrixKind::Lim, _) => q.clone(),
            (NeutrixKind::Osl, Neutrix::Scaled(r, NeutrixKind::Osl)) => r.clone(),
            (NeutrixKind::Osl, Neutrix::Scaled(r, NeutrixKind::Lim)) => {
                (q + r) / Rational::from_integer(2.into())
            }
            (NeutrixKind::Osl, Neutrix::Zero) => q + Rational::from_integer(1.into()),
        };
        let witness = EpsSeries::monomial(Rational::from_integer(1.into()), exponent);
        debug_assert!(self.contains(&witness) && !smaller.contains(&witness));
        Some(witness)
    }
}

/// The inclusion-larger of two neutrices.
pub fn n_max(a: &Neutrix, b: &Neutrix) -> Neutrix {
    if a.inclusion_cmp(b) == Ordering::Less {
        b.clone()
    } else {
        a.clone()
    }
}

/// Variadic maximum; `Zero` for an empty input.
pub fn n_max_all<'a>(items: impl IntoIterator<Item = &'a Neutrix>) -> Neutrix {
    items
        .into_iter()
        .fold(Neutrix::Zero, |acc, n| n_max(&acc, n))
}

/// `a·A`: shifts the group by the valuation of `a`.
pub fn n_scale(a: &EpsSeries, group: &Neutrix) -> Neutrix {
    match (a.valuation(), group) {
        (Valuation::PosInfinity, _) | (_, Neutrix::Zero) => Neutrix::Zero,
        (Valuation::Finite(v), Neutrix::Scaled(q, k)) => Neutrix::Scaled(q + v, *k),
    }
}

/// `A·B`: exponents add; only `£·£`-type products stay `Lim`.
pub fn n_mul(a: &Neutrix, b: &Neutrix) -> Neutrix {
    match (a, b) {
        (Neutrix::Zero, _) | (_, Neutrix::Zero) => Neutrix::Zero,
        (Neutrix::Scaled(q, k), Neutrix::Scaled(r, l)) => {
            let kind = if *k == NeutrixKind::Lim && *l == NeutrixKind::Lim {
                NeutrixKind::Lim
            } else {
                NeutrixKind::Osl
            };
            Neutrix::Scaled(q + r, kind)
        }
    }
}

impl fmt::Display for Neutrix {
    /// `0`, `L(q)`, or `o(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Neutrix::Zero => f.write_str("0"),
            Neutrix::Scaled(q, NeutrixKind::Lim) => write!(f, "L({q})"),
            Neutrix::Scaled(q, NeutrixKind::Osl) => write!(f, "o({q})"),
        }
    }
}

impl Serialize for Neutrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
