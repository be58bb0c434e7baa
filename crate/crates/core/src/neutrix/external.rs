use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::group::{n_max, n_max_all, n_mul, n_scale, Neutrix, NeutrixKind};
use crate::exactnum::{EpsSeries, Rational, Valuation};

/// `a + A`: a representative plus a neutrix, kept in canonical form.
///
/// Canonical means no term of the representative is itself a member of the
/// neutrix, so two external numbers denote the same set exactly when their
/// fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExternalNumber {
    rep: EpsSeries,
    neutrix: Neutrix,
}

/// Drops every term of `rep` that the neutrix absorbs.
pub fn canonicalize(rep: EpsSeries, neutrix: Neutrix) -> ExternalNumber {
    let rep = if neutrix.is_zero() {
        rep
    } else {
        rep.retain_exponents(|e| !neutrix.absorbs_exponent(e))
    };
    ExternalNumber { rep, neutrix }
}

/// Order-of-magnitude class shared by every member of an external number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Class {
    /// Exactly `0`.
    Zeroish,
    Infinitesimal,
    Appreciable,
    Unlimited,
    /// A bare neutrix; its members need not share one class.
    NeutrixOnly(NeutrixKind),
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::Zeroish => f.write_str("Zero"),
            Class::Infinitesimal => f.write_str("Infinitesimal"),
            Class::Appreciable => f.write_str("Appreciable"),
            Class::Unlimited => f.write_str("Unlimited"),
            Class::NeutrixOnly(NeutrixKind::Lim) => f.write_str("NeutrixOnly(Lim)"),
            Class::NeutrixOnly(NeutrixKind::Osl) => f.write_str("NeutrixOnly(Osl)"),
        }
    }
}

/// How the set `α` sits relative to the set `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SetRelation {
    Equal,
    ProperSub,
    ProperSup,
    /// Every member of `α` is below every member of `β`.
    DisjointLess,
    DisjointGreater,
}

impl SetRelation {
    /// Order reading of the relation: overlapping sets compare as `Equal`.
    pub fn ordering(self) -> Ordering {
        match self {
            SetRelation::DisjointLess => Ordering::Less,
            SetRelation::DisjointGreater => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

impl ExternalNumber {
    pub fn new(rep: EpsSeries, neutrix: Neutrix) -> Self {
        canonicalize(rep, neutrix)
    }

    /// A plain number, `a + {0}`.
    pub fn exact(rep: EpsSeries) -> Self {
        ExternalNumber {
            rep,
            neutrix: Neutrix::Zero,
        }
    }

    pub fn from_neutrix(neutrix: Neutrix) -> Self {
        ExternalNumber {
            rep: EpsSeries::zero(),
            neutrix,
        }
    }

    pub fn zero() -> Self {
        Self::exact(EpsSeries::zero())
    }

    pub fn one() -> Self {
        Self::exact(EpsSeries::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(EpsSeries::from_int(n))
    }

    pub fn rep(&self) -> &EpsSeries {
        &self.rep
    }

    pub fn neutrix(&self) -> &Neutrix {
        &self.neutrix
    }

    pub fn into_parts(self) -> (EpsSeries, Neutrix) {
        (self.rep, self.neutrix)
    }

    /// True for `0 + A`, including the exact zero.
    pub fn is_neutrix(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.rep.is_zero() && self.neutrix.is_zero()
    }

    pub fn contains(&self, x: &EpsSeries) -> bool {
        self.neutrix.contains(&(x - &self.rep))
    }

    pub fn add(&self, other: &Self) -> Self {
        canonicalize(&self.rep + &other.rep, n_max(&self.neutrix, &other.neutrix))
    }

    pub fn neg(&self) -> Self {
        ExternalNumber {
            rep: -&self.rep,
            neutrix: self.neutrix.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `ab + max{aB, bA, AB}`.
    pub fn mul(&self, other: &Self) -> Self {
        let a_b = n_scale(&self.rep, &other.neutrix);
        let b_a = n_scale(&other.rep, &self.neutrix);
        let ab = n_mul(&self.neutrix, &other.neutrix);
        canonicalize(&self.rep * &other.rep, n_max_all([&a_b, &b_a, &ab]))
    }

    /// `α·α·…·α` by repeated products; `α⁰ = 1`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn classify(&self) -> Class {
        match self.rep.valuation() {
            Valuation::PosInfinity => match self.neutrix.kind() {
                None => Class::Zeroish,
                Some(kind) => Class::NeutrixOnly(kind),
            },
            // Canonical form keeps the leading term outside the neutrix, so
            // every member shares the representative's valuation.
            Valuation::Finite(v) => match v.cmp(&Rational::zero()) {
                Ordering::Less => Class::Unlimited,
                Ordering::Equal => Class::Appreciable,
                Ordering::Greater => Class::Infinitesimal,
            },
        }
    }

    /// Every member is limited.
    pub fn is_limited(&self) -> bool {
        let rep_ok = match self.rep.valuation() {
            Valuation::PosInfinity => true,
            Valuation::Finite(v) => v >= Rational::zero(),
        };
        rep_ok && self.neutrix.is_subset_of(&Neutrix::lim())
    }

    /// Every member is infinitesimal.
    pub fn is_infinitesimal(&self) -> bool {
        let rep_ok = match self.rep.valuation() {
            Valuation::PosInfinity => true,
            Valuation::Finite(v) => v > Rational::zero(),
        };
        rep_ok && self.neutrix.is_subset_of(&Neutrix::osl())
    }

    pub fn relate(&self, other: &Self) -> SetRelation {
        let gap = &other.rep - &self.rep;
        let span = n_max(&self.neutrix, &other.neutrix);
        if !span.contains(&gap) {
            return if gap.signum() == Ordering::Greater {
                SetRelation::DisjointLess
            } else {
                SetRelation::DisjointGreater
            };
        }
        match self.neutrix.inclusion_cmp(&other.neutrix) {
            Ordering::Equal => SetRelation::Equal,
            Ordering::Less => SetRelation::ProperSub,
            Ordering::Greater => SetRelation::ProperSup,
        }
    }

    /// Total preorder: `Less`/`Greater` only for disjoint sets.
    pub fn order_cmp(&self, other: &Self) -> Ordering {
        self.relate(other).ordering()
    }
}

/// `x - y` is infinitesimal.
pub fn infinitely_close(x: &EpsSeries, y: &EpsSeries) -> bool {
    Neutrix::osl().contains(&(x - y))
}

impl From<EpsSeries> for ExternalNumber {
    fn from(rep: EpsSeries) -> Self {
        ExternalNumber::exact(rep)
    }
}

impl From<Neutrix> for ExternalNumber {
    fn from(n: Neutrix) -> Self {
        ExternalNumber::from_neutrix(n)
    }
}

impl Add for &ExternalNumber {
    type Output = ExternalNumber;
    fn add(self, rhs: &ExternalNumber) -> ExternalNumber {
        ExternalNumber::add(self, rhs)
    }
}

impl Sub for &ExternalNumber {
    type Output = ExternalNumber;
    fn sub(self, rhs: &ExternalNumber) -> ExternalNumber {
        ExternalNumber::sub(self, rhs)
    }
}

impl Mul for &ExternalNumber {
    type Output = ExternalNumber;
    fn mul(self, rhs: &ExternalNumber) -> ExternalNumber {
        ExternalNumber::mul(self, rhs)
    }
}

impl Neg for &ExternalNumber {
    type Output = ExternalNumber;
    fn neg(self) -> ExternalNumber {
        ExternalNumber::neg(self)
    }
}

impl fmt::Display for ExternalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rep.is_zero(), self.neutrix.is_zero()) {
            (_, true) => write!(f, "{}", self.rep),
            (true, false) => write!(f, "{}", self.neutrix),
            (false, false) => write!(f, "{} + {}", self.rep, self.neutrix),
        }
    }
}

impl Serialize for ExternalNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn en(rep: EpsSeries, n: Neutrix) -> ExternalNumber {
        ExternalNumber::new(rep, n)
    }
    fn int(n: i64) -> EpsSeries {
        EpsSeries::from_int(n)
    }
    fn lim(q: i64) -> Neutrix {
        Neutrix::Scaled(rat(q), NeutrixKind::Lim)
    }
    fn osl(q: i64) -> Neutrix {
        Neutrix::Scaled(rat(q), NeutrixKind::Osl)
    }

    #[test]
    fn sums() {
        assert_eq!(en(int(3), osl(0)).add(&en(int(2), lim(1))), en(int(5), osl(0)));
        let o = ExternalNumber::from_neutrix(Neutrix::osl());
        assert_eq!(o.add(&o), o);
        assert_eq!(ExternalNumber::exact(EpsSeries::eps()).add(&o), o);
    }

    #[test]
    fn negation_keeps_the_neutrix() {
        let a = en(int(3), osl(0));
        assert_eq!(a.neg(), en(int(-3), osl(0)));
        assert_eq!(a.add(&a.neg()), ExternalNumber::from_neutrix(osl(0)));
        assert_eq!(a.add(&a.neg()).add(&a), a);
        let o = ExternalNumber::from_neutrix(Neutrix::osl());
        assert_eq!(o.neg(), o);
    }

    #[test]
    fn products() {
        let two = en(int(2), osl(0));
        let three = en(int(3), osl(0));
        assert_eq!(two.mul(&three), en(int(6), osl(0)));

        let big = en(EpsSeries::omega(), lim(0));
        let small = en(EpsSeries::eps(), osl(0));
        let p = big.mul(&small);
        assert_eq!(p, ExternalNumber::from_neutrix(osl(-1)));
        assert!(p.is_neutrix());

        assert_eq!(big.mul(&ExternalNumber::one()), big);
    }

    #[test]
    fn canonical_forms() {
        let x = EpsSeries::from_terms([(rat(0), rat(1)), (rat(1), rat(1)), (rat(2), rat(1))]);
        assert_eq!(canonicalize(x, lim(1)), en(int(1), lim(1)));
        let y = EpsSeries::from_terms([(rat(-1), rat(2)), (ratio(1, 3), rat(1))]);
        assert_eq!(canonicalize(y.clone(), Neutrix::Zero).rep(), &y);
        assert_eq!(canonicalize(int(5), osl(0)).rep(), &int(5));
        let once = canonicalize(y.clone(), osl(0));
        let twice = canonicalize(once.rep().clone(), once.neutrix().clone());
        assert_eq!(once, twice);
    }

    #[test]
    fn classification() {
        let a = en(int(2) + EpsSeries::eps(), osl(0));
        assert_eq!(a.classify(), Class::Appreciable);
        assert!(a.is_limited() && !a.is_infinitesimal());

        let u = en(EpsSeries::omega(), lim(0));
        assert_eq!(u.classify(), Class::Unlimited);
        assert!(!u.is_limited());

        let o = ExternalNumber::from_neutrix(Neutrix::osl());
        assert_eq!(o.classify(), Class::NeutrixOnly(NeutrixKind::Osl));
        assert!(o.is_infinitesimal());

        let l = ExternalNumber::from_neutrix(Neutrix::lim());
        assert_eq!(l.classify(), Class::NeutrixOnly(NeutrixKind::Lim));
        assert!(l.is_limited() && !l.is_infinitesimal());

        assert_eq!(ExternalNumber::zero().classify(), Class::Zeroish);
        assert_eq!(
            ExternalNumber::exact(EpsSeries::eps()).classify(),
            Class::Infinitesimal
        );
    }

    #[test]
    fn relations() {
        let a = en(int(3), osl(0));
        let b = en(int(4), osl(0));
        assert_eq!(a.relate(&b), SetRelation::DisjointLess);
        assert_eq!(b.relate(&a), SetRelation::DisjointGreater);

        let e = en(EpsSeries::eps(), osl(0));
        let o = ExternalNumber::from_neutrix(osl(0));
        assert_eq!(e.relate(&o), SetRelation::Equal);

        let l = ExternalNumber::from_neutrix(lim(0));
        assert_eq!(o.relate(&l), SetRelation::ProperSub);
        assert_eq!(l.relate(&o), SetRelation::ProperSup);
        assert_eq!(l.relate(&en(int(7), osl(0))), SetRelation::ProperSup);
        assert_eq!(o.order_cmp(&l), Ordering::Equal);
        assert_eq!(a.order_cmp(&b), Ordering::Less);
    }

    #[test]
    fn closeness() {
        assert!(infinitely_close(&(int(1) + EpsSeries::eps()), &int(1)));
        assert!(!infinitely_close(&int(1), &int(2)));
        let w = EpsSeries::omega();
        assert!(infinitely_close(
            &w,
            &(&w + &EpsSeries::monomial(rat(1), rat(2)))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(en(int(6), osl(0)).to_string(), "6 + o(0)");
        assert_eq!(ExternalNumber::from_neutrix(lim(0)).to_string(), "L(0)");
        assert_eq!(ExternalNumber::zero().to_string(), "0");
        assert_eq!(
            en(EpsSeries::omega(), Neutrix::Scaled(ratio(1, 2), NeutrixKind::Lim)).to_string(),
            "e^(-1) + L(1/2)"
        );
    }
}
