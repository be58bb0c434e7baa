use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::Rational;

/// Least exponent of a series, with `+∞` standing in for the zero series.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(Rational),
    PosInfinity,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::PosInfinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{q}"),
            Valuation::PosInfinity => f.write_str("+inf"),
        }
    }
}

/// A finite formal sum `Σ c·ε^q` with rational exponents and coefficients.
///
/// Terms are kept sorted by strictly increasing exponent and never carry a
/// zero coefficient, so structural equality is numeric equality. The empty
/// series is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EpsSeries {
    terms: Vec<(Rational, Rational)>,
}

impl EpsSeries {
    pub fn zero() -> Self {
        EpsSeries { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn monomial(coeff: Rational, exponent: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            EpsSeries {
                terms: vec![(exponent, coeff)],
            }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rat(n))
    }

    /// The infinitesimal `ε = ε¹`.
    pub fn eps() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    /// The unlimited `ω = ε⁻¹`.
    pub fn omega() -> Self {
        Self::monomial(Rational::one(), -Rational::one())
    }

    /// Builds a series from `(exponent, coefficient)` pairs in any order,
    /// merging equal exponents and dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        EpsSeries { terms: out }
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
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

    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            Some((e, _)) => Valuation::Finite(e.clone()),
            None => Valuation::PosInfinity,
        }
    }

    /// Leading `(exponent, coefficient)`, i.e. the dominant term.
    pub fn leading(&self) -> Option<&(Rational, Rational)> {
        self.terms.first()
    }

    /// Sign of the number: the sign of the dominant coefficient.
    pub fn signum(&self) -> Ordering {
        match self.terms.first() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn coeff(&self, exponent: &Rational) -> Rational {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(exponent))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn retain_exponents(&self, mut keep: impl FnMut(&Rational) -> bool) -> Self {
        EpsSeries {
            terms: self.terms.iter().filter(|(e, _)| keep(e)).cloned().collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        EpsSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    /// Multiplies by `ε^shift`.
    pub fn shift(&self, shift: &Rational) -> Self {
        EpsSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e + shift, k.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Numeric value after substituting a concrete positive `eps`.
    pub fn approx_at(&self, eps: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let e = e.to_f64().unwrap_or(f64::NAN);
                c * eps.powf(e)
            })
            .sum()
    }
}

impl From<Rational> for EpsSeries {
    fn from(c: Rational) -> Self {
        EpsSeries::constant(c)
    }
}

impl Ord for EpsSeries {
    /// Compares by the sign of the dominant coefficient of `self - other`,
    /// walking both term lists without building the difference.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, c)), None) => return sign_of(c),
                (None, Some((_, c))) => return sign_of(c).reverse(),
                (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                    Ordering::Less => return sign_of(ca),
                    Ordering::Greater => return sign_of(cb).reverse(),
                    Ordering::Equal => {
                        let o = ca.cmp(cb);
                        if o != Ordering::Equal {
                            return o;
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for EpsSeries {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn sign_of(c: &Rational) -> Ordering {
    c.cmp(&Rational::zero())
}

fn merge(a: &[(Rational, Rational)], b: &[(Rational, Rational)], negate_b: bool) -> EpsSeries {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let rhs = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some((e, c))) => {
                out.push((e.clone(), rhs(c)));
                j += 1;
            }
            (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                Ordering::Less => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((eb.clone(), rhs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + rhs(cb);
                    if !s.is_zero() {
                        out.push((ea.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (None, None) => unreachable!(),
        }
    }
    EpsSeries { terms: out }
}

impl Add for &EpsSeries {
    type Output = EpsSeries;
    fn add(self, rhs: &EpsSeries) -> EpsSeries {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &EpsSeries {
    type Output = EpsSeries;
    fn sub(self, rhs: &EpsSeries) -> EpsSeries {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &EpsSeries {
    type Output = EpsSeries;
    fn mul(self, rhs: &EpsSeries) -> EpsSeries {
        if self.is_zero() || rhs.is_zero() {
            return EpsSeries::zero();
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                prods.push((ea + eb, ca * cb));
            }
        }
        EpsSeries::from_terms(prods)
    }
}

impl Neg for &EpsSeries {
    type Output = EpsSeries;
    fn neg(self) -> EpsSeries {
        EpsSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for EpsSeries {
    type Output = EpsSeries;
    fn neg(mut self) -> EpsSeries {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for EpsSeries {
            type Output = EpsSeries;
            fn $m(self, rhs: EpsSeries) -> EpsSeries { (&self).$m(&rhs) }
        }
        impl $tr<&EpsSeries> for EpsSeries {
            type Output = EpsSeries;
            fn $m(self, rhs: &EpsSeries) -> EpsSeries { (&self).$m(rhs) }
        }
        impl $tr<EpsSeries> for &EpsSeries {
            type Output = EpsSeries;
            fn $m(self, rhs: EpsSeries) -> EpsSeries { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

fn fmt_exponent(e: &Rational) -> String {
    if e.is_one() {
        "e".to_string()
    } else if e.is_integer() && e.is_positive() {
        format!("e^{e}")
    } else {
        format!("e^({e})")
    }
}

impl fmt::Display for EpsSeries {
    /// Canonical text: ascending exponents, e.g. `e^(-1) + 3 - 2*e^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&fmt_exponent(e))?;
            } else {
                write!(f, "{mag}*{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

impl Serialize for EpsSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
