use std::collections::BTreeSet;

use super::eval::{evaluate, resolve_index, Assignment, Domains, Env, EvalError};
use super::formula::Formula;
use super::truth::TruthValue3;

pub const DEFAULT_VARIABLE_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Var(String),
    Atom(String, i64),
}

fn collect(f: &Formula, domains: &Domains, env: &mut Env, out: &mut BTreeSet<Slot>) -> Result<(), EvalError> {
    match f {
        Formula::Var(v) => {
            out.insert(Slot::Var(v.clone()));
        }
        Formula::Atom(p, idx) => {
            out.insert(Slot::Atom(p.clone(), resolve_index(idx, env)?));
        }
        Formula::Not(a) => collect(a, domains, env, out)?,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect(a, domains, env, out)?;
            collect(b, domains, env, out)?;
        }
        Formula::Forall(x, d, body) | Formula::Exists(x, d, body) => {
            let (lo, hi) = domains.resolve(d)?;
            for n in lo..=hi {
                env.push((x.clone(), n));
                let r = collect(body, domains, env, out);
                env.pop();
                r?;
            }
        }
    }
    Ok(())
}

/// Outcome of enumerating every three-valued assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K3Status {
    /// Always `1`.
    pub tautology: bool,
    /// Never `0`.
    pub quasi_tautology: bool,
    pub assignments: usize,
}

/// Brute force over all `3ⁿ` assignments to the variables and ground atoms.
pub fn k3_status(f: &Formula, domains: &Domains, bound: usize) -> Result<K3Status, EvalError> {
    let mut slots = BTreeSet::new();
    collect(f, domains, &mut Vec::new(), &mut slots)?;
    let slots: Vec<Slot> = slots.into_iter().collect();
    if slots.len() > bound {
        return Err(EvalError::BoundExceeded {
            count: slots.len(),
            bound,
        });
    }
    let mut digits = vec![0usize; slots.len()];
    let mut status = K3Status {
        tautology: true,
        quasi_tautology: true,
        assignments: 0,
    };
    loop {
        let mut a = Assignment::new();
        a.domains = domains.clone();
        for (slot, d) in slots.iter().zip(&digits) {
            let v = TruthValue3::ALL[*d];
            match slot {
                Slot::Var(name) => {
                    a.vars.insert(name.clone(), v);
                }
                Slot::Atom(p, n) => {
                    a.atoms.insert((p.clone(), *n), v);
                }
            }
        }
        let v = evaluate(f, &a)?;
        status.assignments += 1;
        status.tautology &= v == TruthValue3::True;
        status.quasi_tautology &= v != TruthValue3::False;
        if !status.tautology && !status.quasi_tautology {
            break;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(status);
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
    Ok(status)
}

pub fn is_tautology_k3(f: &Formula, domains: &Domains, bound: usize) -> Result<bool, EvalError> {
    Ok(k3_status(f, domains, bound)?.tautology)
}

/// No assignment makes `f` false.
pub fn quasi_tautology_k3(f: &Formula, domains: &Domains, bound: usize) -> Result<bool, EvalError> {
    Ok(k3_status(f, domains, bound)?.quasi_tautology)
}
