use std::fmt;

use serde::Serialize;

/// Index argument of a soritical atom: `n`, `n+k`, or a literal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IndexTerm {
    Lit(i64),
    Var(String),
    /// `var + offset`, offset nonzero.
    Offset(String, i64),
}

/// Finite quantifier domain: a named range or an explicit `lo..hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Domain {
    Named(String),
    Range(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Formula {
    Atom(String, IndexTerm),
    Var(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Domain, Box<Formula>),
    Exists(String, Domain, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: &str, index: i64) -> Self {
        Formula::Atom(pred.to_string(), IndexTerm::Lit(index))
    }

    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Binding strength; higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => 0,
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(..) => 5,
            Formula::Atom(..) | Formula::Var(..) => 6,
        }
    }

    /// Replaces every free occurrence of a propositional variable.
    pub fn substitute(&self, subst: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        let go = |f: &Formula| Box::new(f.substitute(subst));
        match self {
            Formula::Var(v) => subst(v).unwrap_or_else(|| self.clone()),
            Formula::Atom(..) => self.clone(),
            Formula::Not(a) => Formula::Not(go(a)),
            Formula::And(a, b) => Formula::And(go(a), go(b)),
            Formula::Or(a, b) => Formula::Or(go(a), go(b)),
            Formula::Implies(a, b) => Formula::Implies(go(a), go(b)),
            Formula::Iff(a, b) => Formula::Iff(go(a), go(b)),
            Formula::Forall(x, d, b) => Formula::Forall(x.clone(), d.clone(), go(b)),
            Formula::Exists(x, d, b) => Formula::Exists(x.clone(), d.clone(), go(b)),
        }
    }
}

impl fmt::Display for IndexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexTerm::Lit(n) => write!(f, "{n}"),
            IndexTerm::Var(v) => f.write_str(v),
            IndexTerm::Offset(v, k) if *k < 0 => write!(f, "{v}-{}", -k),
            IndexTerm::Offset(v, k) => write!(f, "{v}+{k}"),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Named(n) => f.write_str(n),
            Domain::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

fn child(f: &mut fmt::Formatter<'_>, sub: &Formula, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({sub})")
    } else {
        write!(f, "{sub}")
    }
}

impl fmt::Display for Formula {
    /// Normalized ASCII form; parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        let binary = |f: &mut fmt::Formatter<'_>, a: &Formula, op: &str, b: &Formula, right_assoc: bool| {
            // Quantifiers bind loosest, so as operands they are always wrapped.
            let lp = a.precedence();
            let rp = b.precedence();
            let left_paren = lp < p || (lp == p && right_assoc);
            let right_paren = rp < p || (rp == p && !right_assoc);
            child(f, a, left_paren)?;
            write!(f, " {op} ")?;
            child(f, b, right_paren)
        };
        match self {
            Formula::Atom(pred, idx) => write!(f, "{pred}({idx})"),
            Formula::Var(v) => f.write_str(v),
            Formula::Not(a) => {
                f.write_str("~")?;
                child(f, a, a.precedence() < p)
            }
            Formula::And(a, b) => binary(f, a, "&", b, false),
            Formula::Or(a, b) => binary(f, a, "|", b, false),
            Formula::Implies(a, b) => binary(f, a, "->", b, true),
            Formula::Iff(a, b) => binary(f, a, "<->", b, false),
            Formula::Forall(x, d, b) => write!(f, "forall {x} in {d}. {b}"),
            Formula::Exists(x, d, b) => write!(f, "exists {x} in {d}. {b}"),
        }
    }
}
