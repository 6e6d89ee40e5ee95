use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use singcoh::examples::{self, BUNDLE};
use singcoh::plumbing::isomorphic;
use singcoh::PlumbingGraph;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn singcoh(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_singcoh"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let r = singcoh(&a);
    let v = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {} {}", r.stdout, r.stderr));
    (r.code, v)
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn result<'a>(v: &'a Value, key: &str) -> &'a str {
    v["results"][key].as_str().unwrap_or_else(|| panic!("missing {key} in {v}"))
}

fn all_checks_pass(v: &Value) -> bool {
    v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true)
}

#[test]
fn a1_graph_has_zero_invariants() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "a1.graph", "v a -2\n");
    let (code, v) = json(&["graph", s(&f)]);
    assert_eq!(code, 0);
    for key in ["m", "eu_h0", "eu_star", "min_path", "sum b0", "sum b1"] {
        assert_eq!(result(&v, key), "0", "{key}");
    }
    assert_eq!(result(&v, "Z_K"), "(0)");
    assert_eq!(result(&v, "det"), "2");
}

#[test]
fn c4_graph_is_budget_limited_for_min_path() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c4.graph", examples::C4_GRAPH);
    let (code, v) = json(&["graph", s(&f)]);
    assert_eq!(code, 2);
    assert_eq!(result(&v, "m"), "-5");
    assert_eq!(result(&v, "eu_h0"), "10");
    assert_eq!(result(&v, "eu_star"), "8");
    assert_eq!(result(&v, "min_path upper bound"), "10");
    assert_eq!(result(&v, "det"), "5");
}

#[test]
fn two_face_graph_min_path_with_raised_budget() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two_face.graph", examples::TWO_FACE_GRAPH);
    let (code, v) = json(&["graph", s(&f), "--max-states", "100000000"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "m"), "-1");
    assert_eq!(result(&v, "eu_h0"), "6");
    assert_eq!(result(&v, "min_path"), "5");
}

#[test]
fn e8_graph_seiberg_witten() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e8.graph", examples::E8_GRAPH);
    let (code, v) = json(&["graph", s(&f)]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "sw"), "-1");
    assert_eq!(result(&v, "det"), "1");
}

#[test]
fn graph_errors_exit_with_parse_code() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.graph", "garbage\n");
    assert_eq!(singcoh(&["graph", s(&bad)]).code, 1);
    let indefinite = write(&dir, "indef.graph", "v a -1\nv b -1\ne a b\n");
    assert_eq!(singcoh(&["graph", s(&indefinite)]).code, 1);
    let missing = dir.path().join("nope.graph");
    let r = singcoh(&["graph", s(&missing)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("nope.graph"));
}

#[test]
fn newton_two_face_certificate_and_emitted_graph() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two_face.support", examples::TWO_FACE_SUPPORT);
    let out = dir.path().join("oka.graph");
    let (code, v) = json(&["newton", s(&f), "--emit-graph", s(&out)]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "sequence pg"), "5");
    assert_eq!(result(&v, "mt_count"), "5");
    assert_eq!(result(&v, "dual path cost"), "5");
    assert_eq!(result(&v, "compact faces"), "2");
    assert!(all_checks_pass(&v));
    let emitted = PlumbingGraph::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let printed = PlumbingGraph::parse(examples::TWO_FACE_GRAPH).unwrap();
    assert!(isomorphic(&emitted, &printed));
}

#[test]
fn newton_two_face_compares_with_min_path_when_budget_allows() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two_face.support", examples::TWO_FACE_SUPPORT);
    let (code, v) = json(&["newton", s(&f), "--max-states", "100000000"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "min_path"), "5");
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "min_path = pg" && c["pass"] == true));
}

#[test]
fn newton_brieskorn_2_3_13() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "b.support", examples::BRIESKORN_2_3_13);
    let (code, v) = json(&["newton", s(&f)]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "sequence pg"), "2");
    assert_eq!(result(&v, "min_path"), "2");
}

#[test]
fn newton_all_even_brieskorn_warns() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "b.support", examples::BRIESKORN_2_4_6);
    let (code, v) = json(&["newton", s(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    assert!(v["results"].get("sequence pg").is_none());
}

#[test]
fn newton_precondition_failures_exit_4() {
    let dir = TempDir::new().unwrap();
    let not_rhs = write(&dir, "a.support", "p 4 0 0\np 0 4 0\np 0 0 4\n");
    assert_eq!(singcoh(&["newton", s(&not_rhs)]).code, 4);
    let not_convenient = write(&dir, "b.support", "p 2 0 0\np 0 2 0\np 1 1 1\n");
    assert_eq!(singcoh(&["newton", s(&not_convenient)]).code, 4);
}

#[test]
fn si_c4_passes_all_oracle_checks() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c4.si", examples::C4_SI);
    let (code, v) = json(&["si", s(&f)]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "eu_surgery"), "10");
    assert_eq!(result(&v, "pg_superisolated"), "10");
    let mins: Vec<&str> = (0..4).map(|j| result(&v, &format!("min j={j}"))).collect();
    assert_eq!(mins, ["6", "3", "1", "0"]);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
    assert!(all_checks_pass(&v));
}

#[test]
fn si_non_realizable_skips_oracle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x.si", "d 5\npair 2 3\n");
    let (code, v) = json(&["si", s(&f)]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "realizable"), "false");
    assert_eq!(result(&v, "eu_surgery"), "1");
    assert!(v["checks"].as_array().unwrap().is_empty());
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn si_degenerate_degree_is_rejected() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x.si", "d 2\npair 2 3\n");
    assert_eq!(singcoh(&["si", s(&f)]).code, 1);
}

#[test]
fn reports_are_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two_face.support", examples::TWO_FACE_SUPPORT);
    let a = singcoh(&["--json", "newton", s(&f)]);
    let b = singcoh(&["--json", "newton", s(&f)]);
    assert_eq!(a.stdout, b.stdout);
    let t1 = singcoh(&["newton", s(&f)]);
    let t2 = singcoh(&["newton", s(&f)]);
    assert_eq!(t1.stdout, t2.stdout);
}

fn bundle_dir() -> TempDir {
    let dir = TempDir::new().unwrap();
    for (name, text) in BUNDLE {
        write(&dir, name, text);
    }
    dir
}

fn row_statuses(v: &Value) -> Vec<String> {
    (1..=7)
        .map(|i| result(v, &format!("row {i}")).split(' ').next().unwrap().to_string())
        .collect()
}

#[test]
fn reproduce_default_run() {
    let (code, v) = json(&["reproduce"]);
    assert_eq!(
        row_statuses(&v),
        ["BUDGET-SKIPPED", "BUDGET-SKIPPED", "PASS", "PASS", "FAIL", "PASS", "PASS"]
    );
    // Row 5 fails on the non-algebraic single-cusp data of the sweep.
    assert_eq!(code, 3);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed.len(), 5);
    assert!(failed.iter().all(|n| n.starts_with("row 5: d=")));

    let dir = bundle_dir();
    let (code2, v2) = json(&["reproduce", s(dir.path())]);
    assert_eq!(code2, 3);
    assert_eq!(v["input_sha256"], v2["input_sha256"]);
    assert_eq!(v["checks"], v2["checks"]);
}

#[test]
fn reproduce_tiny_budget_marks_skipped_rows() {
    let (code, v) = json(&["reproduce", "--max-states", "1000"]);
    let st = row_statuses(&v);
    assert_eq!(st[0], "BUDGET-SKIPPED");
    assert_eq!(st[2], "BUDGET-SKIPPED");
    assert!(!v["skipped"].as_array().unwrap().is_empty());
    let failing_rows: Vec<usize> = (0..7).filter(|&i| st[i] == "FAIL").collect();
    assert_eq!(failing_rows, [4]);
    assert_eq!(code, 3);
}

#[test]
fn reproduce_corrupted_bundle_exits_1() {
    let dir = bundle_dir();
    write(&dir, "c4.graph", "v a -2\ne a b\n");
    let r = singcoh(&["reproduce", s(dir.path())]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("c4.graph"));
    std::fs::remove_file(dir.path().join("c4.si")).unwrap();
    assert_eq!(singcoh(&["reproduce", s(dir.path())]).code, 1);
}
