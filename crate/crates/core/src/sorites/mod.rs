//! Soritical series under classical, three-valued, fuzzy, supervaluation
//! and nonstandard predicate models.

mod config;
mod model;
mod run;

pub use config::{scenario_from_json, ConfigError};
pub use model::{
    default_witnesses, Backend, Designation, FuzzyMembership, ModelError, ModelInteger, Scenario, Threshold, Value,
};
pub use run::{
    barnes_check, doubling_analysis, run_conditional, run_induction, run_scenario, Barnes, Conditional, Constraint,
    Doubling, Fragment, Induction, MemberLink, SharpBoundary, SoritesError, SoritesReport, WitnessVerdict,
};
