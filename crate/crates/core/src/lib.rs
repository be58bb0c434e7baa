//! External numbers over an exact infinitesimal series model, three-valued,
//! fuzzy and supervaluation semantics, and Sorites scenario analysis.

pub mod exactnum;
pub mod expr;
pub mod neutrix;

pub use exactnum::{EpsSeries, Rational, Valuation};
pub use neutrix::{Class, ExternalNumber, Neutrix, NeutrixKind, SetRelation};
pub mod lawsuite;
pub mod logic;
pub mod sorites;
