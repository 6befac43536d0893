use std::process::{Command, Output};

use serde_json::Value;

fn arx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arx")).args(args).output().expect("arx runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn tau_of_simple_is_next_simple() {
    let out = arx(&["mod", "tau", "X:1:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["identified_as"], "X:2:2");
    assert_eq!(v["dims"], serde_json::json!([0, 0, 1, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn almost_split_sequence_report() {
    let v = json(&arx(&["mod", "ass", "X:1:1"]));
    assert_eq!(v["left"]["identified_as"], "X:2:2");
    assert_eq!(v["middle"]["identified_as"], "X:1:2");
    assert_eq!(v["right"]["identified_as"], "X:1:1");
    assert_eq!(v["check"]["exact"], true);
    assert_eq!(v["check"]["failures"], serde_json::json!([]));
}

#[test]
fn classify_projective_outside_left_part() {
    let v = json(&arx(&["mod", "classify", "P:1"]));
    assert_eq!(v["l_member"], "No");
    assert_eq!(v["r_member"], true);
}

#[test]
fn hom_and_ext_dimensions() {
    assert_eq!(json(&arx(&["mod", "ext", "X:1:1", "X:2:2"]))["dim"], 1);
    assert_eq!(json(&arx(&["mod", "ext", "X:2:2", "X:1:1"]))["dim"], 0);
    assert_eq!(json(&arx(&["mod", "hom", "P:2", "X:1:4"]))["dim"], 1);
}

#[test]
fn decompose_a_defined_sum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p1.json");
    let out = arx(&["mod", "define", "P:1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&arx(&["mod", "decompose", path.to_str().unwrap()]));
    assert_eq!(v["pieces"][0]["identified_as"], "X:1:8");
}

#[test]
fn exit_codes() {
    assert_eq!(arx(&["mod", "tau", "Q:1"]).status.code(), Some(2));
    assert_eq!(arx(&["mod", "ass", "X:3:8"]).status.code(), Some(1));
    assert_eq!(arx(&["mod", "tauminus", "X:2:8"]).status.code(), Some(1));
    assert_eq!(arx(&["--cat", "fi:3", "dot", "arquiver"]).status.code(), Some(1));
    assert_eq!(arx(&["--field", "fp:4", "cat", "build"]).status.code(), Some(2));
    assert_eq!(arx(&["bogus"]).status.code(), Some(2));
}

#[test]
fn growth_verdicts() {
    let lin = json(&arx(&["cat", "growth", "linear:8"]));
    for row in lin["growth"].as_array().unwrap() {
        assert!(row["dims"].as_array().unwrap().iter().all(|d| d == 1));
        assert_eq!(row["verdict"]["Bounded"], 1);
    }
    let star = json(&arx(&["cat", "growth", "star_ray:8"]));
    let row = &star["growth"][0];
    assert_eq!(row["dims"], serde_json::json!([1, 1, 2, 3, 4, 5, 6, 7, 8]));
    assert_eq!(row["verdict"], "GrowingAtHorizon");
}

#[test]
fn validate_lists_the_broken_triple() {
    let built = arx(&["cat", "build", "linear:3"]);
    let mut cat: Value = serde_json::from_slice(&built.stdout).unwrap();
    assert_eq!(json(&arx(&["cat", "validate", "linear:3"]))["ok"], true);
    cat["comp"]["0,1,2"] = serde_json::json!([[["2"]]]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&cat).unwrap()).unwrap();
    let out = arx(&["cat", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    let violations = v["violations"].as_array().unwrap();
    assert!(!violations.is_empty());
    assert_eq!(violations[0]["morphisms"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_reports_and_exit_status() {
    let out = arx(&["verify", "hereditary", "--cat", "star_ray:6"]);
    assert_eq!(out.status.code(), Some(0));
    let records = json(&out);
    assert!(records.as_array().unwrap().iter().all(|r| r["pass"] == true));
    assert_eq!(arx(&["verify", "nosuch"]).status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic() {
    let a = arx(&["verify", "yoneda", "--cat", "linear:4"]);
    let b = arx(&["verify", "yoneda", "--cat", "linear:4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dot_matches_golden_and_parses() {
    let out = arx(&["--cat", "linear:3", "dot", "arquiver"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, include_str!("golden/arquiver_linear3.dot"));
    let g = dot_parser::ast::Graph::try_from(text.as_str()).expect("valid DOT");
    assert!(g.is_digraph);
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 10);
    for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)] {
        let edge = format!("X_{i}_{j} -> X_{}_{} [style=dashed];", i + 1, j + 1);
        assert!(text.contains(&edge), "{edge}");
    }
    assert_eq!(text.matches("style=dashed").count(), 6);
}

#[test]
fn dot_on_a_single_object() {
    let text = String::from_utf8(arx(&["--cat", "linear:0", "dot", "arquiver"]).stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 1);
    assert!(!text.contains("->"));
}
