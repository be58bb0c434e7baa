use thiserror::Error;

use super::formula::{Domain, Formula, IndexTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Dot,
    DotDot,
    Plus,
    Minus,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::End => "end of input".to_string(),
            other => format!("{other:?}"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let rest = &src[i..];
        let tok = if c.is_ascii_whitespace() {
            i += 1;
            continue;
        } else if rest.starts_with("<->") {
            i += 3;
            Tok::Iff
        } else if rest.starts_with("->") {
            i += 2;
            Tok::Implies
        } else if rest.starts_with("..") {
            i += 2;
            Tok::DotDot
        } else if c.is_ascii_digit() {
            let len = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
            i += len;
            let n = rest[..len].parse().map_err(|_| SyntaxError {
                offset: start,
                message: "integer out of range".into(),
            })?;
            Tok::Int(n)
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let len = rest
                .bytes()
                .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                .count();
            i += len;
            Tok::Ident(rest[..len].to_string())
        } else {
            i += 1;
            match c {
                b'~' => Tok::Not,
                b'&' => Tok::And,
                b'|' => Tok::Or,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'.' => Tok::Dot,
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                _ => {
                    return Err(SyntaxError {
                        offset: start,
                        message: format!("unexpected character `{}`", rest.chars().next().unwrap_or('?')),
                    })
                }
            }
        };
        out.push((start, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const KEYWORDS: [&str; 3] = ["forall", "exists", "in"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let found = self.peek().describe();
            self.err(format!("expected {what}, found {found}"))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.implication()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let right = self.implication()?;
            left = Formula::iff(left, right);
        }
        Ok(left)
    }

    fn implication(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let right = self.implication()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let right = self.conjunction()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn signed_int(&mut self) -> Result<i64, SyntaxError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Tok::Int(n) => Ok(if neg { -n } else { n }),
            _ => {
                self.pos -= 1;
                self.err("expected an integer")
            }
        }
    }

    fn quantifier(&mut self, universal: bool) -> Result<Formula, SyntaxError> {
        let var = match self.bump() {
            Tok::Ident(v) if !KEYWORDS.contains(&v.as_str()) => v,
            _ => {
                self.pos -= 1;
                return self.err("expected a bound variable");
            }
        };
        if !self.is_keyword("in") {
            return self.err("quantifiers need a finite domain: `in <domain>`");
        }
        self.bump();
        let domain = match self.peek().clone() {
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                self.bump();
                Domain::Named(name)
            }
            Tok::Int(_) | Tok::Minus => {
                let lo = self.signed_int()?;
                self.expect(Tok::DotDot, "`..`")?;
                let hi = self.signed_int()?;
                Domain::Range(lo, hi)
            }
            _ => return self.err("expected a domain name or `lo..hi`"),
        };
        self.expect(Tok::Dot, "`.`")?;
        let body = Box::new(self.formula()?);
        Ok(if universal {
            Formula::Forall(var, domain, body)
        } else {
            Formula::Exists(var, domain, body)
        })
    }

    fn index(&mut self) -> Result<IndexTerm, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(_) | Tok::Minus => Ok(IndexTerm::Lit(self.signed_int()?)),
            Tok::Ident(v) if !KEYWORDS.contains(&v.as_str()) => {
                self.bump();
                let sign = match self.peek() {
                    Tok::Plus => 1,
                    Tok::Minus => -1,
                    _ => return Ok(IndexTerm::Var(v)),
                };
                self.bump();
                match self.bump() {
                    Tok::Int(0) => Ok(IndexTerm::Var(v)),
                    Tok::Int(k) => Ok(IndexTerm::Offset(v, sign * k)),
                    _ => {
                        self.pos -= 1;
                        self.err("expected an integer offset")
                    }
                }
            }
            _ => self.err("expected an index"),
        }
    }

    fn primary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(kw) if kw == "forall" || kw == "exists" => {
                self.bump();
                self.quantifier(kw == "forall")
            }
            Tok::Ident(kw) if kw == "in" => self.err("unexpected keyword `in`"),
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let idx = self.index()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Formula::Atom(name, idx))
                } else {
                    Ok(Formula::Var(name))
                }
            }
            other => self.err(format!("expected a formula, found {}", other.describe())),
        }
    }
}

/// Parses the ASCII surface syntax: `~ & | -> <->`, `forall n in D. ...`,
/// atoms `S(n)`, `S(n+1)`, `S(3)` and propositional variables.
pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        let found = p.peek().describe();
        return p.err(format!("unexpected {found}"));
    }
    Ok(f)
}
