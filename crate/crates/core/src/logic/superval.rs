use std::collections::BTreeSet;

use serde::Serialize;

use super::eval::{eval_classical, Domains, EvalError};
use super::formula::{Domain, Formula, IndexTerm};

/// Classical sharpenings of the soritical predicate, one per cutoff `k`:
/// `S(n)` is true iff `n < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrecisificationFamily {
    cutoffs: BTreeSet<i64>,
}

impl PrecisificationFamily {
    pub fn new(cutoffs: impl IntoIterator<Item = i64>) -> Result<Self, EvalError> {
        let cutoffs: BTreeSet<i64> = cutoffs.into_iter().collect();
        if cutoffs.is_empty() {
            return Err(EvalError::EmptyFamily);
        }
        Ok(PrecisificationFamily { cutoffs })
    }

    pub fn cutoffs(&self) -> impl Iterator<Item = i64> + '_ {
        self.cutoffs.iter().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SuperVerdict {
    Supertrue,
    Superfalse,
    Indeterminate,
}

/// Supertrue iff true on every precisification, superfalse iff false on
/// every one.
pub fn eval_super(
    f: &Formula,
    family: &PrecisificationFamily,
    domains: &Domains,
) -> Result<SuperVerdict, EvalError> {
    let mut any_true = false;
    let mut any_false = false;
    for k in family.cutoffs() {
        if eval_classical(f, k, domains)? {
            any_true = true;
        } else {
            any_false = true;
        }
    }
    Ok(match (any_true, any_false) {
        (true, false) => SuperVerdict::Supertrue,
        (false, true) => SuperVerdict::Superfalse,
        _ => SuperVerdict::Indeterminate,
    })
}

/// `S(n) & ~S(n+1)` at a fixed index.
pub fn boundary_instance(n: i64) -> Formula {
    Formula::and(Formula::atom("S", n), Formula::not(Formula::atom("S", n + 1)))
}

/// `exists n in domain. S(n) & ~S(n+1)`.
pub fn sharp_boundary(domain: Domain) -> Formula {
    let s = |k| Formula::Atom("S".into(), k);
    Formula::Exists(
        "n".into(),
        domain,
        Box::new(Formula::and(
            s(IndexTerm::Var("n".into())),
            Formula::not(s(IndexTerm::Offset("n".into(), 1))),
        )),
    )
}
