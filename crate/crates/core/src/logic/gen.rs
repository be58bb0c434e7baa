//! Random propositional formulas for property tests.

use rand::Rng;

use super::formula::Formula;

pub const VARIABLES: [&str; 6] = ["p", "q", "r", "s", "t", "u"];

/// Random formula over the first `vars` names of [`VARIABLES`], at most
/// `depth` connectives deep.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, vars: usize, depth: u32) -> Formula {
    let vars = vars.clamp(1, VARIABLES.len());
    if depth == 0 || rng.gen_ratio(1, 4) {
        return Formula::var(VARIABLES[rng.gen_range(0..vars)]);
    }
    let sub = |rng: &mut R| random_formula(rng, vars, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::implies(sub(rng), sub(rng)),
        _ => Formula::iff(sub(rng), sub(rng)),
    }
}
