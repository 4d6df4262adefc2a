//! End-to-end runs of the `glmn` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn glmn(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glmn")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn structure_lists_elements_and_relations() {
    let dir = tempfile::tempdir().unwrap();
    let o = glmn(dir.path(), &["structure", "--shape", "1,1", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis_elements"].as_array().unwrap().len(), 4);
    assert_eq!(v["relations"].as_array().unwrap().len(), 11);
}

#[test]
fn structure_rejects_a_bad_shape() {
    let dir = tempfile::tempdir().unwrap();
    let o = glmn(dir.path(), &["structure", "--shape", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn build_verify_and_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = glmn(d, &["build-module", "--shape", "2,1", "--weight", "3,1,-5", "--standard", "--out", "m.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("12 basis tableaux"));

    let o = glmn(d, &["verify", "--module", "m.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reports = json_lines(&o);
    assert!(reports.len() >= 10);
    assert!(reports.iter().all(|r| r["status"] == "pass"), "{}", stdout(&o));
    assert!(stderr(&o).contains("module is irreducible"));

    let o = glmn(d, &["export", "--module", "m.json", "--matrices", "--out", "e.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let e: Value = serde_json::from_str(&std::fs::read_to_string(d.join("e.json")).unwrap()).unwrap();
    assert_eq!(e["dimension"], 12);
    assert!(e["matrices"].as_object().is_some_and(|m| !m.is_empty()));

    // the exported file imports again, matrices included
    let o = glmn(d, &["verify", "--module", "e.json", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    glmn(d, &["build-module", "--shape", "1,2", "--weight", "2,0,0", "--standard", "--out", "m.json"]);
    let a = glmn(d, &["verify", "--module", "m.json", "--seed", "5"]);
    let b = glmn(d, &["verify", "--module", "m.json", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stderr(&a).contains("seed 5"));
}

#[test]
fn atypical_module_is_reported_reducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = glmn(d, &["build-module", "--shape", "1,1", "--weight", "0,0", "--standard", "--out", "a.json"]);
    assert!(o.status.success());
    let o = glmn(d, &["verify", "--module", "a.json", "--suite", "irreducibility"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["details"]["criterion"], false);
    assert_eq!(r["details"]["oracle"], false);
    assert!(stderr(&o).contains("module is reducible"));
}

#[test]
fn tampered_module_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    glmn(d, &["build-module", "--shape", "1,1", "--weight", "1,0", "--standard", "--out", "m.json"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(d.join("m.json")).unwrap()).unwrap();
    v["basis"][0]["rows"][0][0] = Value::String("7".into());
    std::fs::write(d.join("bad.json"), serde_json::to_string(&v).unwrap()).unwrap();
    let o = glmn(d, &["verify", "--module", "bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.json"));
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("r.json"), "{\"n\": 2,\n \"pairs\": [}").unwrap();
    let o = glmn(d, &["check-admissible", "--relations", "r.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn check_admissible_plain_and_super() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("r.json"), r#"{"n":2,"pairs":[{"from":[2,1],"to":[1,1],"class":"plus"}]}"#).unwrap();
    let o = glmn(d, &["check-admissible", "--relations", "r.json", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["admissible"], true);

    // two arrows out of (1,1) into row 2 break reducedness
    std::fs::write(
        d.join("bad.json"),
        r#"{"n":2,"pairs":[{"from":[1,1],"to":[2,1],"class":"minus"},{"from":[1,1],"to":[2,2],"class":"minus"}]}"#,
    )
    .unwrap();
    let o = glmn(d, &["check-admissible", "--relations", "bad.json", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["admissible"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());

    let pair = r#"{"c1":{"n":2,"pairs":[{"from":[1,1],"to":[2,1],"class":"minus"},{"from":[2,2],"to":[1,1],"class":"plus"}]},
                  "c2":{"n":1,"offset":2,"pairs":[]}}"#;
    std::fs::write(d.join("s.json"), pair).unwrap();
    let o = glmn(d, &["check-admissible", "--relations", "s.json", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["admissible"], true);
    assert_eq!(v["c1_orders_row_m"], true);
    let o = glmn(d, &["check-admissible", "--relations", "s.json"]);
    assert!(stdout(&o).contains("warning"));
}

#[test]
fn berezinian_matches_operator() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    glmn(d, &["build-module", "--shape", "1,1", "--weight", "2,1", "--standard", "--out", "m.json"]);
    let o = glmn(d, &["berezinian", "--module", "m.json", "--order", "2", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["operator_check"]["diagonal_and_matching"], true);
}

#[test]
fn infinite_module_on_a_ball() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // the odd entry of row 2 is unconstrained by the empty pair
    std::fs::write(d.join("seed.json"), r#"{"m":1,"n":2,"rows":[["1/2"],["3/2","1/3"],["3/2","2/7","-1/5"]]}"#).unwrap();
    std::fs::write(d.join("rel.json"), r#"{"c1":{"n":1,"pairs":[]},"c2":{"n":2,"offset":1,"pairs":[]}}"#).unwrap();
    let o = glmn(
        d,
        &["build-module", "--shape", "1,2", "--seed", "seed.json", "--relations", "rel.json", "--radius", "2", "--out", "m.json"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(d.join("m.json")).unwrap()).unwrap();
    assert_eq!(v["finite"], false);
    assert_eq!(v["radius"], 2);
    let o = glmn(d, &["verify", "--module", "m.json", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn covariant_build() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = glmn(d, &["build-module", "--shape", "2,1", "--weight", "2,1,1", "--standard", "--covariant", "--out", "c.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(d.join("c.json")).unwrap()).unwrap();
    assert_eq!(v["mode"], "quasi-covariant");
    let o = glmn(d, &["verify", "--module", "c.json", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
