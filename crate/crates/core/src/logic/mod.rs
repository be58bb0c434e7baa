//! Formula language and its classical, strong Kleene, fuzzy, and
//! supervaluation semantics.

mod eval;
mod formula;
pub mod gen;
mod parse;
mod superval;
mod tables;
mod tautology;
mod truth;

pub use eval::{
    eval_classical, eval_fuzzy, eval_k3, evaluate, Assignment, Domains, EvalError, Interpretation,
    PredicateModel, SORITICAL,
};
pub use formula::{Domain, Formula, IndexTerm};
pub use parse::{parse_formula, SyntaxError};
pub use superval::{boundary_instance, eval_super, sharp_boundary, PrecisificationFamily, SuperVerdict};
pub use tables::{render_tables, BINARY_ROWS, NEGATION_ROWS};
pub use tautology::{is_tautology_k3, k3_status, quasi_tautology_k3, K3Status, DEFAULT_VARIABLE_BOUND};
pub use truth::{FuzzyDegree, TruthAlgebra, TruthValue3};
