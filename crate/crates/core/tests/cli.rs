//! The `hyperg` binary: exit codes, error documents, determinism and file handling.

use std::process::{Command, Output};

use serde_json::Value;

fn hyperg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperg")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

const Z2_HALF: &str = r#"{
  "name": "Z2(1/2)", "order": 2, "involution": [0, 1],
  "constants": [[[1, 0], [0, 1]], [[0, 1], ["1/2", "1/2"]]],
  "metadata": {"family": "z2_theta", "params": {"theta": "1/2"}}
}"#;

#[test]
fn validate_document_with_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    std::fs::write(&path, Z2_HALF).unwrap();
    let out = hyperg(&["validate", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["haar"], serde_json::json!([1, 2]));
}

#[test]
fn axiom_violation_exits_2_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, Z2_HALF.replace(r#"["1/2", "1/2"]"#, r#"[0.5, 0.4]"#)).unwrap();
    let out = hyperg(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = &json(&out)["error"];
    assert_eq!(err["kind"], "AxiomViolation");
    let violations = err["details"]["violations"].as_array().unwrap();
    assert!(violations.iter().any(|v| v["kind"] == "RowSum" && v["location"] == serde_json::json!([1, 1])));
}

#[test]
fn missing_file_exits_4() {
    let out = hyperg(&["chartable", "--input", "/nonexistent/k.json"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["error"]["kind"], "Io");
    let out = hyperg(&["chartable", "--input", "preset:no_such_preset"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn unresolvable_oracle_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.json");
    std::fs::write(&path, r#"{"labels": [0, 0, 1, 2]}"#).unwrap();
    let out = hyperg(&[
        "hshp", "--input", "preset:z4", "--oracle", path.to_str().unwrap(), "--max-batches", "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = &json(&out)["error"];
    assert_eq!(err["kind"], "Unresolved");
    assert_eq!(err["details"]["batches"], 3);
}

#[test]
fn oracle_file_solves() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.json");
    std::fs::write(&path, r#"{"labels": [5, 9, 5, 9, 5, 9]}"#).unwrap();
    let out = hyperg(&["hshp", "--input", "preset:z6", "--oracle", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["run"]["reconstructed"], serde_json::json!([0, 2, 4]));
}

#[test]
fn hshp_demo_on_bose_mesner() {
    let out = hyperg(&[
        "hshp", "--input", "preset:bose_mesner_square", "--hidden", "0,1", "--seed", "7", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let run = &json(&out)["results"]["run"];
    assert_eq!(run["reconstructed"], serde_json::json!([0, 1]));
    assert_eq!(run["verified"], true);
}

#[test]
fn non_closed_hidden_set_exits_2() {
    let out = hyperg(&["hshp", "--input", "preset:bose_mesner_square", "--hidden", "0,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "NotClosed");
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let args = ["hshp", "--input", "preset:z4xz4", "--hidden", "0,5,10,15", "--seed", "11", "--format", "json"];
    let a = hyperg(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_hyperg")).args(args).env("HYPERG_THREADS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = hyperg(&["subs", "--input", "preset:bose_mesner_x_z2", "--format", "json"]);
    let d = hyperg(&["subs", "--input", "preset:bose_mesner_x_z2", "--format", "json"]);
    assert_eq!(c.stdout, d.stdout);
    assert!(!c.stdout.contains(&b'\r'));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("qft.json");
    let out = hyperg(&["qft", "--input", "preset:z3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"]["unitary"], true);
}

#[test]
fn chartable_reports_permutation_against_expected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("expected.json");
    std::fs::write(&path, r#"{"characters": [[1, -1, 0], [1, 1, 1], [1, 1, -1]]}"#).unwrap();
    let out = hyperg(&[
        "chartable", "--input", "preset:bose_mesner_square", "--expected", path.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["results"];
    assert_eq!(r["expected_permutation"], serde_json::json!([2, 0, 1]));
    assert_eq!(r["expected_matches"], true);
}

#[test]
fn timings_only_when_requested() {
    let plain = json(&hyperg(&["validate", "--input", "preset:z2", "--format", "json"]));
    assert!(plain.get("wall_times").is_none());
    let timed = json(&hyperg(&["validate", "--input", "preset:z2", "--format", "json", "--timings"]));
    assert!(timed["wall_times"]["total_seconds"].is_number());
}

#[test]
fn subs_on_noncommutative_group() {
    let out = hyperg(&["subs", "--input", "preset:s3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["commutative"], false);
    assert_eq!(v["results"]["subhypergroups"].as_array().unwrap().len(), 6);
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let out = hyperg(&["bench", "--max-k", "4", "--csv", csv.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["outputs_agree"], true);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 5);
}

#[test]
fn selftest_flag_runs_criteria() {
    let out = hyperg(&["chartable", "--selftest", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    let ids: Vec<u64> = v["selftest"].as_array().unwrap().iter().map(|r| r["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, vec![1, 2, 3, 9]);
    assert_eq!(v["passed"], true);
}
