use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use super::model::{Backend, ModelInteger, Scenario, Threshold, Value};
use crate::exactnum::ratio;
use crate::logic::{boundary_instance, eval_super, sharp_boundary, Domain, Domains, SuperVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SoritesError {
    #[error("chain of length {length} passes beyond the naive numbers; modus ponens applies only a naive number of times")]
    ChainThroughWitness { length: String },
    #[error("{operation} is defined only for the nonstandard backend, not {backend}")]
    BackendUnsupported { backend: String, operation: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub holds: bool,
    pub evidence: String,
    /// Set whenever `holds` is false.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Barnes {
    pub c1: Constraint,
    pub c2: Constraint,
    pub c3: Constraint,
}

impl Barnes {
    pub fn all_hold(&self) -> bool {
        self.c1.holds && self.c2.holds && self.c3.holds
    }
}

fn show(x: &ModelInteger, v: &Value) -> String {
    format!("S({x}) = {v}")
}

pub fn barnes_check(sc: &Scenario) -> Barnes {
    let (lo, hi) = sc.range;
    let first = ModelInteger::Naive(lo);
    let v1 = sc.value(&first).expect("naive values are always evaluable");
    let c1 = Constraint {
        holds: sc.designated_true(&v1),
        evidence: show(&first, &v1),
        witness: (!sc.designated_true(&v1)).then(|| lo.to_string()),
    };

    let c2 = if matches!(sc.backend, Backend::Nonstandard(_)) {
        let mut evidence = Vec::new();
        let mut witness = None;
        for w in sc.witness_values() {
            let v = sc.value(&w).expect("nonstandard backend evaluates witnesses");
            if witness.is_none() && !sc.designated_false(&v) {
                witness = Some(w.to_string());
            }
            evidence.push(show(&w, &v));
        }
        if evidence.is_empty() {
            witness = Some("no witnesses".into());
        }
        Constraint {
            holds: witness.is_none(),
            evidence: evidence.join(", "),
            witness,
        }
    } else {
        let last = ModelInteger::Naive(hi);
        let v = sc.value(&last).expect("naive");
        Constraint {
            holds: sc.designated_false(&v),
            evidence: show(&last, &v),
            witness: (!sc.designated_false(&v)).then(|| hi.to_string()),
        }
    };

    let mut pairs: Vec<(ModelInteger, ModelInteger)> =
        (lo..hi).map(|n| (ModelInteger::Naive(n), ModelInteger::Naive(n + 1))).collect();
    if matches!(sc.backend, Backend::Nonstandard(_)) {
        for w in sc.witness_values() {
            pairs.push((w.offset(-1), w.clone()));
            pairs.push((w.clone(), w.offset(1)));
        }
    }
    let flip = pairs.iter().find_map(|(a, b)| {
        let (va, vb) = (sc.value(a)?, sc.value(b)?);
        (sc.designated_true(&va) && sc.designated_false(&vb)).then(|| (a.clone(), va, b.clone(), vb))
    });
    let c3 = match flip {
        Some((a, va, b, vb)) => Constraint {
            holds: false,
            evidence: format!("{}, {}", show(&a, &va), show(&b, &vb)),
            witness: Some(a.to_string()),
        },
        None => Constraint {
            holds: true,
            evidence: format!("no designated flip among {} adjacent pairs", pairs.len()),
            witness: None,
        },
    };
    Barnes { c1, c2, c3 }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessVerdict {
    pub witness: String,
    pub value: String,
    pub negated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Induction {
    pub basis: String,
    pub basis_holds: bool,
    pub steps_checked: usize,
    pub step_holds: bool,
    pub step_counterexample: Option<i64>,
    pub min_step_degree: Option<String>,
    pub witnesses: Vec<WitnessVerdict>,
    pub reading: String,
}

pub fn run_induction(sc: &Scenario) -> Induction {
    let (lo, hi) = sc.range;
    let nonstandard = matches!(sc.backend, Backend::Nonstandard(_));
    let first = ModelInteger::Naive(lo);
    let basis = sc.value(&first).expect("naive");
    // In the nonstandard model every sampled naive n has a naive successor.
    let last_step = if nonstandard { hi } else { hi - 1 };
    let mut counterexample = None;
    let mut min_degree: Option<Value> = None;
    for n in lo..=last_step {
        let v = sc
            .conditional(&ModelInteger::Naive(n), &ModelInteger::Naive(n + 1))
            .expect("naive");
        if counterexample.is_none() && !sc.designated_true(&v) {
            counterexample = Some(n);
        }
        if let Value::Fuzzy(d) = &v {
            if !matches!(&min_degree, Some(Value::Fuzzy(m)) if m <= d) {
                min_degree = Some(v.clone());
            }
        }
    }
    let witnesses: Vec<WitnessVerdict> = if nonstandard {
        sc.witness_values()
            .iter()
            .map(|w| {
                let v = sc.value(w).expect("nonstandard");
                WitnessVerdict {
                    witness: w.to_string(),
                    negated: sc.designated_false(&v),
                    value: v.to_string(),
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    let step_holds = counterexample.is_none();
    let reading = match (&sc.backend, counterexample) {
        (Backend::Nonstandard(_), None) if witnesses.iter().all(|w| w.negated) => {
            "step demonstrated on naive samples; S fails at every witness, so induction over S is external".into()
        }
        (Backend::Nonstandard(_), None) => "step demonstrated on naive samples".into(),
        (Backend::ClassicalCutoff(_), Some(n)) => format!("step fails at n={n}: the sharp cutoff dissolves the paradox"),
        (Backend::FuzzyMembership(_), Some(n)) => {
            format!("every step is nearly true but none reaches the threshold; first at n={n}")
        }
        (_, Some(n)) => format!("step is not designated at n={n}"),
        (_, None) => "step holds at every sampled n".into(),
    };
    Induction {
        basis: show(&first, &basis),
        basis_holds: sc.designated_true(&basis),
        steps_checked: (last_step - lo + 1) as usize,
        step_holds,
        step_counterexample: counterexample,
        min_step_degree: min_degree.map(|v| v.to_string()),
        witnesses,
        reading,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberLink {
    pub cutoff: i64,
    pub failing_link: Option<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conditional {
    pub chain_length: String,
    pub completed: bool,
    pub failing_link: Option<[i64; 2]>,
    pub conclusion: Option<String>,
    pub final_degree: Option<String>,
    pub weakest_premise: Option<String>,
    pub per_member: Vec<MemberLink>,
}

/// Modus ponens from `S(a_lo)` along `length - 1` links.
pub fn run_conditional(sc: &Scenario) -> Result<Conditional, SoritesError> {
    let length = match &sc.chain_length {
        ModelInteger::Naive(l) => *l,
        w @ ModelInteger::Witness(_) => {
            return Err(SoritesError::ChainThroughWitness { length: w.to_string() });
        }
    };
    let lo = sc.range.0;
    let end = lo + length - 1;
    let mut failing_link = None;
    let mut weakest: Option<Value> = None;
    let basis = sc.value(&ModelInteger::Naive(lo)).expect("naive");
    if !sc.designated_true(&basis) {
        failing_link = Some([lo, lo]);
    }
    for n in lo..end {
        let v = sc
            .conditional(&ModelInteger::Naive(n), &ModelInteger::Naive(n + 1))
            .expect("naive");
        if failing_link.is_none() && !sc.designated_true(&v) {
            failing_link = Some([n, n + 1]);
        }
        if let Value::Fuzzy(d) = &v {
            if !matches!(&weakest, Some(Value::Fuzzy(m)) if m <= d) {
                weakest = Some(v.clone());
            }
        }
    }
    let conclusion_value = sc.value(&ModelInteger::Naive(end)).expect("naive");
    let per_member = match &sc.backend {
        Backend::Superval(fam) => fam
            .cutoffs()
            .map(|k| MemberLink {
                cutoff: k,
                failing_link: (lo..end).find(|n| *n < k && n + 1 >= k).map(|n| [n, n + 1]),
            })
            .collect(),
        _ => Vec::new(),
    };
    Ok(Conditional {
        chain_length: length.to_string(),
        completed: failing_link.is_none(),
        conclusion: failing_link
            .is_none()
            .then(|| show(&ModelInteger::Naive(end), &conclusion_value)),
        final_degree: matches!(conclusion_value, Value::Fuzzy(_)).then(|| conclusion_value.to_string()),
        weakest_premise: weakest.map(|v| v.to_string()),
        failing_link,
        per_member,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Doubling {
    pub threshold: String,
    pub samples_checked: usize,
    pub invariance_holds: bool,
    /// `x` with `S(x)` and not `S(2x)`.
    pub witness: Option<String>,
}

pub fn doubling_analysis(sc: &Scenario) -> Result<Doubling, SoritesError> {
    let Backend::Nonstandard(threshold) = &sc.backend else {
        return Err(SoritesError::BackendUnsupported {
            backend: sc.backend.id(),
            operation: "doubling analysis".into(),
        });
    };
    let (lo, hi) = sc.range;
    let mut samples: Vec<ModelInteger> = (lo..=hi).map(ModelInteger::Naive).collect();
    for w in &sc.witnesses {
        let half = ModelInteger::Witness(w.scale(&ratio(1, 2)));
        let w = ModelInteger::Witness(w.clone());
        samples.extend([half, w.clone(), w.offset(-1), w.offset(1)]);
    }
    let witness = samples.iter().find(|x| {
        let s = |y: &ModelInteger| sc.value(y) == Some(Value::Member(true));
        s(x) && !s(&x.double())
    });
    Ok(Doubling {
        threshold: threshold.to_string(),
        samples_checked: samples.len(),
        invariance_holds: witness.is_none(),
        witness: witness.map(|x| x.to_string()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpBoundary {
    pub formula: String,
    pub verdict: SuperVerdict,
    pub supertrue_instances: Vec<i64>,
}

fn sharp_boundary_fragment(sc: &Scenario) -> Option<SharpBoundary> {
    let Backend::Superval(fam) = &sc.backend else {
        return None;
    };
    let (lo, hi) = sc.range;
    let d = Domains::new();
    let f = sharp_boundary(Domain::Range(lo, hi - 1));
    Some(SharpBoundary {
        formula: f.to_string(),
        verdict: eval_super(&f, fam, &d).expect("closed formula"),
        supertrue_instances: (lo..hi)
            .filter(|n| eval_super(&boundary_instance(*n), fam, &d) == Ok(SuperVerdict::Supertrue))
            .collect(),
    })
}

/// A fragment that either ran or reports why it could not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Fragment<T> {
    Ran(T),
    Refused { error: String },
}

impl<T> Fragment<T> {
    fn from_result(r: Result<T, SoritesError>) -> Self {
        match r {
            Ok(t) => Fragment::Ran(t),
            Err(e) => Fragment::Refused { error: e.to_string() },
        }
    }

    pub fn ran(&self) -> Option<&T> {
        match self {
            Fragment::Ran(t) => Some(t),
            Fragment::Refused { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoritesReport {
    pub tool: String,
    pub version: String,
    pub scenario: String,
    pub backend: String,
    pub range: [i64; 2],
    pub witnesses: Vec<String>,
    pub barnes: Barnes,
    pub induction: Induction,
    pub conditional: Fragment<Conditional>,
    pub doubling: Fragment<Doubling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharp_boundary: Option<SharpBoundary>,
    pub notes: Vec<String>,
}

pub fn run_scenario(sc: &Scenario) -> SoritesReport {
    let mut notes = Vec::new();
    if let Backend::Nonstandard(t) = &sc.backend {
        notes.push("nonstandard steps are demonstrated on samples, not proved".to_string());
        if let Threshold::Cut(_) = t {
            notes.push("a cut is not a neutrix: it has a sharp edge among the witnesses".to_string());
        }
    }
    SoritesReport {
        tool: "vague".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        scenario: sc.name.clone(),
        backend: sc.backend.id(),
        range: [sc.range.0, sc.range.1],
        witnesses: sc.witnesses.iter().map(|w| w.to_string()).collect(),
        barnes: barnes_check(sc),
        induction: run_induction(sc),
        conditional: Fragment::from_result(run_conditional(sc)),
        doubling: Fragment::from_result(doubling_analysis(sc)),
        sharp_boundary: sharp_boundary_fragment(sc),
        notes,
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

impl SoritesReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "{} {}", self.tool, self.version);
        let _ = writeln!(o, "scenario: {}", self.scenario);
        let _ = writeln!(o, "backend: {}", self.backend);
        let _ = writeln!(o, "range: {}..{}", self.range[0], self.range[1]);
        if !self.witnesses.is_empty() {
            let _ = writeln!(o, "witnesses: {}", self.witnesses.join(", "));
        }
        let _ = writeln!(o, "\n[barnes]");
        for (name, c) in [("c1", &self.barnes.c1), ("c2", &self.barnes.c2), ("c3", &self.barnes.c3)] {
            let _ = write!(o, "{name} {}: {}", mark(c.holds), c.evidence);
            if let Some(w) = &c.witness {
                let _ = write!(o, " (witness {w})");
            }
            o.push('\n');
        }
        let i = &self.induction;
        let _ = writeln!(o, "\n[induction]");
        let _ = writeln!(o, "basis {}: {}", mark(i.basis_holds), i.basis);
        let _ = write!(o, "step {} over {} samples", mark(i.step_holds), i.steps_checked);
        if let Some(n) = i.step_counterexample {
            let _ = write!(o, " (counterexample n={n})");
        }
        o.push('\n');
        if let Some(d) = &i.min_step_degree {
            let _ = writeln!(o, "min step degree: {d}");
        }
        for w in &i.witnesses {
            let _ = writeln!(o, "not S({}) {}: S = {}", w.witness, mark(w.negated), w.value);
        }
        let _ = writeln!(o, "reading: {}", i.reading);
        let _ = writeln!(o, "\n[conditional]");
        match &self.conditional {
            Fragment::Ran(c) => {
                let _ = writeln!(o, "chain length: {}", c.chain_length);
                match c.failing_link {
                    Some([a, b]) => {
                        let _ = writeln!(o, "stops at link {a} -> {b}");
                    }
                    None => {
                        let _ = writeln!(o, "completed: {}", c.conclusion.as_deref().unwrap_or(""));
                    }
                }
                if let Some(d) = &c.final_degree {
                    let _ = writeln!(o, "final degree: {d}");
                }
                if let Some(d) = &c.weakest_premise {
                    let _ = writeln!(o, "weakest premise: {d}");
                }
                for m in &c.per_member {
                    match m.failing_link {
                        Some([a, b]) => {
                            let _ = writeln!(o, "cutoff {}: stops at link {a} -> {b}", m.cutoff);
                        }
                        None => {
                            let _ = writeln!(o, "cutoff {}: completed", m.cutoff);
                        }
                    }
                }
            }
            Fragment::Refused { error } => {
                let _ = writeln!(o, "refused: {error}");
            }
        }
        let _ = writeln!(o, "\n[doubling]");
        match &self.doubling {
            Fragment::Ran(d) => {
                let _ = writeln!(o, "threshold: {}", d.threshold);
                match &d.witness {
                    None => {
                        let _ = writeln!(o, "invariance holds on {} samples", d.samples_checked);
                    }
                    Some(x) => {
                        let _ = writeln!(o, "invariance fails: S({x}) and not S(2*({x}))");
                    }
                }
            }
            Fragment::Refused { error } => {
                let _ = writeln!(o, "unsupported: {error}");
            }
        }
        if let Some(s) = &self.sharp_boundary {
            let _ = writeln!(o, "\n[sharp boundary]");
            let _ = writeln!(o, "{}: {:?}", s.formula, s.verdict);
            let _ = writeln!(o, "supertrue instances: {}", s.supertrue_instances.len());
        }
        if !self.notes.is_empty() {
            let _ = writeln!(o, "\n[notes]");
            for n in &self.notes {
                let _ = writeln!(o, "{n}");
            }
        }
        o
    }
}
