//! Arithmetic expressions over external numbers.

use std::fmt;

use rand::Rng;

use crate::exactnum::parse::Cursor;
use crate::exactnum::{EpsSeries, ParseSeriesError};
use crate::neutrix::oracle::sample_member;
use crate::neutrix::{neutrix_literal, ExternalNumber};

pub const MAX_POWER: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(ExternalNumber),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self) -> ExternalNumber {
        match self {
            Expr::Num(x) => x.clone(),
            Expr::Neg(a) => a.eval().neg(),
            Expr::Add(a, b) => a.eval().add(&b.eval()),
            Expr::Sub(a, b) => a.eval().sub(&b.eval()),
            Expr::Mul(a, b) => a.eval().mul(&b.eval()),
            Expr::Pow(a, n) => a.eval().pow(*n),
        }
    }

    /// Same tree with every literal replaced by one sampled member.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> EpsSeries {
        match self {
            Expr::Num(x) => sample_member(x, rng),
            Expr::Neg(a) => -a.sample(rng),
            Expr::Add(a, b) => a.sample(rng) + b.sample(rng),
            Expr::Sub(a, b) => a.sample(rng) - b.sample(rng),
            Expr::Mul(a, b) => a.sample(rng) * b.sample(rng),
            Expr::Pow(a, n) => a.sample(rng).pow(*n),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "({x})"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Pow(a, n) => write!(f, "{a}^{n}"),
        }
    }
}

/// Result of checking a computed value against sampled members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprCheck {
    pub samples: usize,
    /// A sampled value outside the computed external number.
    pub escape: Option<EpsSeries>,
}

impl ExprCheck {
    pub fn passed(&self) -> bool {
        self.escape.is_none()
    }
}

pub fn check_expr<R: Rng + ?Sized>(e: &Expr, samples: usize, rng: &mut R) -> ExprCheck {
    let value = e.eval();
    let escape = (0..samples).map(|_| e.sample(rng)).find(|s| !value.contains(s));
    ExprCheck { samples, escape }
}

fn sum(cur: &mut Cursor<'_>) -> Result<Expr, ParseSeriesError> {
    let mut left = product(cur)?;
    loop {
        if cur.eat("+") {
            left = Expr::Add(Box::new(left), Box::new(product(cur)?));
        } else if cur.eat("-") {
            left = Expr::Sub(Box::new(left), Box::new(product(cur)?));
        } else {
            return Ok(left);
        }
    }
}

fn product(cur: &mut Cursor<'_>) -> Result<Expr, ParseSeriesError> {
    let mut left = unary(cur)?;
    while cur.eat("*") {
        left = Expr::Mul(Box::new(left), Box::new(unary(cur)?));
    }
    Ok(left)
}

fn unary(cur: &mut Cursor<'_>) -> Result<Expr, ParseSeriesError> {
    if cur.eat("-") {
        return Ok(Expr::Neg(Box::new(unary(cur)?)));
    }
    if cur.eat("+") {
        return unary(cur);
    }
    power(cur)
}

fn power(cur: &mut Cursor<'_>) -> Result<Expr, ParseSeriesError> {
    let base = primary(cur)?;
    if !cur.eat("^") {
        return Ok(base);
    }
    match cur.natural().and_then(|n| u32::try_from(n).ok()) {
        Some(n) if n <= MAX_POWER => Ok(Expr::Pow(Box::new(base), n)),
        _ => Err(cur.error(format!("expected a natural exponent at most {MAX_POWER}"))),
    }
}

fn primary(cur: &mut Cursor<'_>) -> Result<Expr, ParseSeriesError> {
    if cur.eat("(") {
        let e = sum(cur)?;
        cur.expect(")")?;
        return Ok(e);
    }
    if let Some(n) = neutrix_literal(cur)? {
        return Ok(Expr::Num(ExternalNumber::from_neutrix(n)));
    }
    if let Some(q) = cur.eps_power()? {
        return Ok(Expr::Num(ExternalNumber::exact(EpsSeries::monomial(num_traits::One::one(), q))));
    }
    if cur.eat_word("w") {
        return Ok(Expr::Num(ExternalNumber::exact(EpsSeries::omega())));
    }
    if let Some(c) = cur.unsigned_rational()? {
        return Ok(Expr::Num(ExternalNumber::exact(EpsSeries::constant(c))));
    }
    Err(cur.error("expected a number, `e`, `w`, a neutrix, or `(`"))
}

/// Parses `+ - * ^` over rationals, `e^q`, `w` (= `e^-1`), neutrix
/// literals (`£`, `osl`, `L(q)`, `o(q)`) and parentheses.
pub fn parse_expr(text: &str) -> Result<Expr, ParseSeriesError> {
    let mut cur = Cursor::new(text);
    let e = sum(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates.
pub fn eval_str(text: &str) -> Result<ExternalNumber, ParseSeriesError> {
    parse_expr(text).map(|e| e.eval())
}
