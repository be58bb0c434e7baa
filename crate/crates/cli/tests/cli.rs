use std::path::PathBuf;
use std::process::{Command, Output};

fn vague(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vague"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn numbers_eval_examples() {
    let o = vague(&["numbers", "eval", "(2 + osl) * (3 + osl)", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("value: 6 + o(0)"), "{s}");
    assert!(s.contains("class: Appreciable"));
    assert!(s.contains("oracle: ok"));
    assert!(stdout(&vague(&["numbers", "eval", "osl + osl"])).starts_with("value: o(0)\n"));
    assert!(stdout(&vague(&["numbers", "eval", "3 * L(0)"])).starts_with("value: L(0)\n"));
}

#[test]
fn numbers_eval_json() {
    let o = vague(&["numbers", "eval", "e * w + osl", "--check", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["value"], "1 + o(0)");
    assert_eq!(doc["oracle"]["passed"], true);
    assert_eq!(doc["oracle"]["seed"], 42);
}

#[test]
fn syntax_error_is_a_usage_error() {
    let o = vague(&["numbers", "eval", "(1 +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset"));
}

#[test]
fn tables_match_golden_file() {
    let golden = std::fs::read_to_string(root().join("fixtures/kleene_tables.txt")).unwrap();
    let o = vague(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden);
}

#[test]
fn laws_pass_and_are_reproducible() {
    let a = vague(&["laws", "--seed", "9", "--n", "60"]);
    let b = vague(&["laws", "--seed", "9", "--n", "60"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("vague 0.1.0 laws seed=9 instances=60\n"));
}

#[test]
fn laws_zero_instances_is_a_usage_error() {
    assert_eq!(vague(&["laws", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn injected_fault_fails_with_counterexample() {
    let o = vague(&["laws", "--n", "40", "--inject-fault", "nmax"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("FAIL"));
    assert!(s.contains("counterexample:"));
}

#[test]
fn laws_json_embeds_seed_and_version() {
    let o = vague(&["laws", "--seed", "5", "--n", "20", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["seed"], 5);
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn sorites_fixtures() {
    let o = vague(&["sorites", "run", "fixtures/classical_cutoff5.json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("c3 NO: S(4) = true, S(5) = false (witness 4)"), "{s}");
    assert!(s.contains("(counterexample n=4)"));

    let o = vague(&["sorites", "run", "fixtures/nonstandard_heap.json", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for c in ["c1", "c2", "c3"] {
        assert_eq!(doc["barnes"][c]["holds"], true);
    }
    assert_eq!(doc["induction"]["witnesses"][0]["witness"], "e^(-1)");
    assert_eq!(doc["induction"]["witnesses"][0]["negated"], true);
}

#[test]
fn sorites_output_is_deterministic_and_writable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = vague(&[
        "sorites",
        "run",
        "fixtures/nonstandard_cut.json",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&out).unwrap();
    let again = vague(&["sorites", "run", "fixtures/nonstandard_cut.json", "--format", "json"]);
    assert_eq!(written, again.stdout);
}

#[test]
fn bad_config_reports_pointer() {
    let o = vague(&["sorites", "run", "fixtures/bad_backend.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/backend/type"));
    assert_eq!(vague(&["sorites", "run", "fixtures/missing.json"]).status.code(), Some(2));
}
