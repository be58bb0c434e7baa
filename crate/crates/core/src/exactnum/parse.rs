use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{EpsSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ParseSeriesError {
    pub offset: usize,
    pub message: String,
}

/// Byte cursor over ASCII-ish input shared by the textual front ends.
#[derive(Debug, Clone)]
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    /// Like [`eat`](Self::eat) but refuses a match that continues as an identifier.
    pub(crate) fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if let Some(after) = self.rest().strip_prefix(word) {
            if !after.chars().next().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                self.pos += word.len();
                return true;
            }
        }
        false
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseSeriesError {
        ParseSeriesError {
            offset: self.pos,
            message: message.into(),
        }
    }

    pub(crate) fn expect(&mut self, tok: &str) -> Result<(), ParseSeriesError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.skip_ws();
            Err(self.error(format!("expected `{tok}`")))
        }
    }

    pub(crate) fn natural(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let digits: usize = self
            .rest()
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if digits == 0 {
            return None;
        }
        let n = self.rest()[..digits].parse().ok();
        self.pos += digits;
        n
    }

    /// `n` or `n/d` with natural `n`, `d`.
    pub(crate) fn unsigned_rational(&mut self) -> Result<Option<Rational>, ParseSeriesError> {
        let Some(n) = self.natural() else {
            return Ok(None);
        };
        let save = self.clone();
        if self.eat("/") {
            match self.natural() {
                Some(d) if !d.is_zero() => return Ok(Some(Rational::new(n, d))),
                Some(_) => return Err(self.error("zero denominator")),
                None => *self = save,
            }
        }
        Ok(Some(Rational::from_integer(n)))
    }

    /// Optionally signed rational.
    pub(crate) fn signed_rational(&mut self) -> Result<Rational, ParseSeriesError> {
        let neg = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        match self.unsigned_rational()? {
            Some(r) => Ok(if neg { -r } else { r }),
            None => Err(self.error("expected a rational number")),
        }
    }

    /// The part after `e^`: `2`, `-1`, or a parenthesized signed rational.
    pub(crate) fn exponent(&mut self) -> Result<Rational, ParseSeriesError> {
        if self.eat("(") {
            let q = self.signed_rational()?;
            self.expect(")")?;
            Ok(q)
        } else {
            self.signed_rational()
        }
    }

    /// `e` optionally followed by `^exponent`; returns the exponent.
    pub(crate) fn eps_power(&mut self) -> Result<Option<Rational>, ParseSeriesError> {
        if !self.eat_word("e") {
            return Ok(None);
        }
        if self.eat("^") {
            Ok(Some(self.exponent()?))
        } else {
            Ok(Some(Rational::one()))
        }
    }
}

/// Parses `n` or `n/d`, optionally signed.
pub fn parse_rational(text: &str) -> Result<Rational, ParseSeriesError> {
    let mut cur = Cursor::new(text);
    let q = cur.signed_rational()?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(q)
}

pub(crate) fn series_term(cur: &mut Cursor<'_>) -> Result<EpsSeries, ParseSeriesError> {
    if let Some(c) = cur.unsigned_rational()? {
        if cur.eat("*") {
            match cur.eps_power()? {
                Some(e) => Ok(EpsSeries::monomial(c, e)),
                None => Err(cur.error("expected `e` after `*`")),
            }
        } else {
            Ok(EpsSeries::constant(c))
        }
    } else if let Some(e) = cur.eps_power()? {
        Ok(EpsSeries::monomial(Rational::one(), e))
    } else {
        Err(cur.error("expected a term"))
    }
}

/// Parses a sum of `c*e^q` terms, e.g. `3 - 2*e^(1/2) + e^(-1)`.
///
/// With `strict == false` a trailing `+` that does not introduce a series
/// term is left for the caller (the neutrix part of an external number).
pub(crate) fn series_sum(
    cur: &mut Cursor<'_>,
    strict: bool,
) -> Result<EpsSeries, ParseSeriesError> {
    let mut acc = EpsSeries::zero();
    let mut negative = cur.eat("-");
    if !negative {
        cur.eat("+");
    }
    loop {
        let t = series_term(cur)?;
        acc = if negative { acc - t } else { acc + t };
        let save = cur.clone();
        if cur.eat("+") {
            negative = false;
        } else if cur.eat("-") {
            negative = true;
        } else {
            return Ok(acc);
        }
        if !strict && series_term(&mut cur.clone()).is_err() {
            *cur = save;
            return Ok(acc);
        }
    }
}

pub fn parse_series(text: &str) -> Result<EpsSeries, ParseSeriesError> {
    let mut cur = Cursor::new(text);
    let s = series_sum(&mut cur, true)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(s)
}
