use std::collections::BTreeMap;

use thiserror::Error;

use super::formula::{Domain, Formula, IndexTerm};
use super::truth::{FuzzyDegree, TruthAlgebra, TruthValue3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value for `{0}`")]
    UnboundAtom(String),
    #[error("index variable `{0}` is not bound by a quantifier")]
    UnboundIndex(String),
    #[error("unknown domain `{0}`")]
    UnknownDomain(String),
    #[error("precisification family is empty")]
    EmptyFamily,
    #[error("{count} atoms exceed the enumeration bound {bound}")]
    BoundExceeded { count: usize, bound: usize },
}

/// Named finite index ranges, inclusive on both ends.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Domains(BTreeMap<String, (i64, i64)>);

impl Domains {
    pub fn new() -> Self {
        Domains::default()
    }

    pub fn with(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.0.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn resolve(&self, d: &Domain) -> Result<(i64, i64), EvalError> {
        match d {
            Domain::Range(lo, hi) => Ok((*lo, *hi)),
            Domain::Named(n) => self
                .0
                .get(n)
                .copied()
                .ok_or_else(|| EvalError::UnknownDomain(n.clone())),
        }
    }
}

/// Supplies values for atoms and propositional variables.
pub trait Interpretation {
    type Value: TruthAlgebra;
    fn atom(&self, pred: &str, index: i64) -> Option<Self::Value>;
    fn var(&self, name: &str) -> Option<Self::Value>;
    fn domains(&self) -> &Domains;
}

pub(crate) type Env = Vec<(String, i64)>;

pub(crate) fn resolve_index(t: &IndexTerm, env: &Env) -> Result<i64, EvalError> {
    let lookup = |v: &str| {
        env.iter()
            .rev()
            .find(|(name, _)| name == v)
            .map(|(_, n)| *n)
            .ok_or_else(|| EvalError::UnboundIndex(v.to_string()))
    };
    match t {
        IndexTerm::Lit(n) => Ok(*n),
        IndexTerm::Var(v) => lookup(v),
        IndexTerm::Offset(v, k) => Ok(lookup(v)? + k),
    }
}

fn eval_in<I: Interpretation>(f: &Formula, interp: &I, env: &mut Env) -> Result<I::Value, EvalError> {
    Ok(match f {
        Formula::Atom(pred, idx) => {
            let n = resolve_index(idx, env)?;
            interp
                .atom(pred, n)
                .ok_or_else(|| EvalError::UnboundAtom(format!("{pred}({n})")))?
        }
        Formula::Var(v) => interp
            .var(v)
            .ok_or_else(|| EvalError::UnboundAtom(v.clone()))?,
        Formula::Not(a) => eval_in(a, interp, env)?.not(),
        Formula::And(a, b) => eval_in(a, interp, env)?.and(&eval_in(b, interp, env)?),
        Formula::Or(a, b) => eval_in(a, interp, env)?.or(&eval_in(b, interp, env)?),
        Formula::Implies(a, b) => eval_in(a, interp, env)?.implies(&eval_in(b, interp, env)?),
        Formula::Iff(a, b) => eval_in(a, interp, env)?.iff(&eval_in(b, interp, env)?),
        Formula::Forall(x, d, body) | Formula::Exists(x, d, body) => {
            let universal = matches!(f, Formula::Forall(..));
            let (lo, hi) = interp.domains().resolve(d)?;
            let mut acc = if universal { I::Value::top() } else { I::Value::bottom() };
            for n in lo..=hi {
                env.push((x.clone(), n));
                let v = eval_in(body, interp, env);
                env.pop();
                let v = v?;
                acc = if universal { acc.and(&v) } else { acc.or(&v) };
            }
            acc
        }
    })
}

/// Evaluates `f` compositionally; quantifiers fold `∧` / `∨` over the domain.
pub fn evaluate<I: Interpretation>(f: &Formula, interp: &I) -> Result<I::Value, EvalError> {
    eval_in(f, interp, &mut Vec::new())
}

/// Explicit values for variables and ground atoms.
#[derive(Debug, Clone)]
pub struct Assignment<V> {
    pub vars: BTreeMap<String, V>,
    pub atoms: BTreeMap<(String, i64), V>,
    pub domains: Domains,
}

impl<V> Default for Assignment<V> {
    fn default() -> Self {
        Assignment {
            vars: BTreeMap::new(),
            atoms: BTreeMap::new(),
            domains: Domains::new(),
        }
    }
}

impl<V> Assignment<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(mut self, name: &str, v: V) -> Self {
        self.vars.insert(name.to_string(), v);
        self
    }

    pub fn atom(mut self, pred: &str, index: i64, v: V) -> Self {
        self.atoms.insert((pred.to_string(), index), v);
        self
    }
}

impl<V: TruthAlgebra> Interpretation for Assignment<V> {
    type Value = V;
    fn atom(&self, pred: &str, index: i64) -> Option<V> {
        self.atoms.get(&(pred.to_string(), index)).cloned()
    }
    fn var(&self, name: &str) -> Option<V> {
        self.vars.get(name).cloned()
    }
    fn domains(&self) -> &Domains {
        &self.domains
    }
}

/// The soritical predicate read through a function of the index.
pub struct PredicateModel<'a, V> {
    pub predicate: &'a str,
    pub value: &'a dyn Fn(i64) -> Option<V>,
    pub domains: &'a Domains,
}

impl<V: TruthAlgebra> Interpretation for PredicateModel<'_, V> {
    type Value = V;
    fn atom(&self, pred: &str, index: i64) -> Option<V> {
        if pred == self.predicate {
            (self.value)(index)
        } else {
            None
        }
    }
    fn var(&self, _name: &str) -> Option<V> {
        None
    }
    fn domains(&self) -> &Domains {
        self.domains
    }
}

pub const SORITICAL: &str = "S";

pub fn eval_k3(f: &Formula, v: &Assignment<TruthValue3>) -> Result<TruthValue3, EvalError> {
    evaluate(f, v)
}

/// Classical evaluation with a sharp cutoff: `S(n)` holds iff `n < cutoff`.
pub fn eval_classical(f: &Formula, cutoff: i64, domains: &Domains) -> Result<bool, EvalError> {
    let value = move |n: i64| Some(n < cutoff);
    evaluate(
        f,
        &PredicateModel {
            predicate: SORITICAL,
            value: &value,
            domains,
        },
    )
}

/// Fuzzy evaluation of `S(n)` as `membership(n)`.
pub fn eval_fuzzy(
    f: &Formula,
    membership: &dyn Fn(i64) -> Option<FuzzyDegree>,
    domains: &Domains,
) -> Result<FuzzyDegree, EvalError> {
    evaluate(
        f,
        &PredicateModel {
            predicate: SORITICAL,
            value: membership,
            domains,
        },
    )
}
