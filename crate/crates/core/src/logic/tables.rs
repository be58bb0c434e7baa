use super::truth::{TruthAlgebra, TruthValue3};

use TruthValue3::{False as F, Half as H, True as T};

/// Row order of the negation table.
pub const NEGATION_ROWS: [TruthValue3; 3] = [T, F, H];

/// Row order of the binary-connective table.
pub const BINARY_ROWS: [(TruthValue3, TruthValue3); 9] = [
    (T, T),
    (T, F),
    (T, H),
    (F, T),
    (F, F),
    (F, H),
    (H, T),
    (H, F),
    (H, H),
];

fn row(cells: &[String]) -> String {
    let mut line = cells
        .iter()
        .map(|c| format!("{c:<8}"))
        .collect::<Vec<_>>()
        .join("| ");
    line.truncate(line.trim_end().len());
    line.push('\n');
    line
}

/// Fixed-width strong Kleene tables: negation, then `∨ ∧ → ↔`.
pub fn render_tables() -> String {
    let mut out = String::new();
    out.push_str(&row(&["p".into(), "¬p".into()]));
    for p in NEGATION_ROWS {
        out.push_str(&row(&[p.to_string(), p.not().to_string()]));
    }
    out.push('\n');
    out.push_str(&row(
        &["p", "q", "p ∨ q", "p ∧ q", "p → q", "p ↔ q"].map(String::from),
    ));
    for (p, q) in BINARY_ROWS {
        out.push_str(&row(&[
            p.to_string(),
            q.to_string(),
            p.or(&q).to_string(),
            p.and(&q).to_string(),
            p.implies(&q).to_string(),
            p.iff(&q).to_string(),
        ]));
    }
    out
}
