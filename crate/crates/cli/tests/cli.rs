//! End-to-end runs of the `wgt` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const GL3: &str = r#"{ "pyramid": [1, 1, 1], "lambda": { "1": ["2"], "2": ["1"], "3": ["0"] } }"#;
const P11: &str = r#"{ "pyramid": [1, 1], "lambda": { "1": ["1"], "2": ["0"] } }"#;
const P12: &str = r#"{ "pyramid": [1, 2], "lambda": { "1": ["1"], "2": ["0", "1/2"] } }"#;

fn wgt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wgt")).args(args).output().expect("spawn wgt")
}

fn weights(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dim_of_gl3_adjoint_is_eight() {
    let dir = TempDir::new().unwrap();
    let w = weights(&dir, "w.json", GL3);
    let out = wgt(&["--weights", s(&w), "dim"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().next(), Some("8"));
    assert!(stdout.contains("column 1: 8"));
}

#[test]
fn abc_suite_passes_on_small_pyramid() {
    let dir = TempDir::new().unwrap();
    let w = weights(&dir, "w.json", P11);
    let report = dir.path().join("report.json");
    let out = wgt(&["--weights", s(&w), "verify", "--suites", "abc", "--report", s(&report)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let parsed: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(parsed[0]["suite"], "abc");
}

#[test]
fn all_suites_pass_sequentially() {
    let dir = TempDir::new().unwrap();
    let w = weights(&dir, "w.json", P12);
    let out = wgt(&["--weights", s(&w), "--sequential", "verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn lowering_operator_has_single_unit_entry() {
    let dir = TempDir::new().unwrap();
    let w = weights(&dir, "w.json", P12);
    let m = dir.path().join("m");
    let out = wgt(&["--weights", s(&w), "matrices", "--ops", "C", "--out", s(&m)]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(m.join("C_1.json")).unwrap()).unwrap();
    assert_eq!(json["dim"], 2);
    let coeffs = json["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert_eq!(coeffs[0]["power"], 0);
    assert_eq!(coeffs[0]["entries"], serde_json::json!([[1, 0, "1"]]));
}

#[test]
fn bad_input_exits_one_with_json_diagnostic() {
    let dir = TempDir::new().unwrap();
    let nongeneric = weights(&dir, "bad.json", r#"{ "pyramid": [1, 2], "lambda": { "1": ["1"], "2": ["0", "1"] } }"#);
    let malformed = weights(&dir, "broken.json", "{");
    let missing = dir.path().join("missing.json");
    for args in [
        vec!["--weights", s(&nongeneric), "dim"],
        vec!["--weights", s(&malformed), "dim"],
        vec!["--weights", s(&missing), "dim"],
        vec!["dim"],
        vec!["no-such-command"],
        vec!["demo-gln", "--n", "3", "--weight", "1,0"],
    ] {
        let out = wgt(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let line = String::from_utf8(out.stderr).unwrap();
        let diag: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
        assert!(diag["error"].is_string() && diag["message"].is_string());
    }
}

#[test]
fn explicit_gln_on_wide_pyramid_is_rejected() {
    let dir = TempDir::new().unwrap();
    let w = weights(&dir, "w.json", P12);
    assert_eq!(wgt(&["--weights", s(&w), "verify", "--suites", "gln"]).status.code(), Some(1));
}

#[test]
fn exports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let w = weights(&dir, "w.json", P12);
    let run = |tag: &str| {
        let p = dir.path().join(format!("patterns_{tag}.json"));
        let b = dir.path().join(format!("branch_{tag}.json"));
        let m = dir.path().join(format!("m_{tag}"));
        for args in [
            vec!["--weights", s(&w), "patterns", "--out", s(&p)],
            vec!["--weights", s(&w), "branch", "--out", s(&b)],
            vec!["--weights", s(&w), "matrices", "--out", s(&m)],
        ] {
            assert_eq!(wgt(&args).status.code(), Some(0));
        }
        let mut files: Vec<_> = fs::read_dir(&m).unwrap().map(|e| e.unwrap().path()).collect();
        files.sort();
        let mut bytes = vec![fs::read(p).unwrap(), fs::read(b).unwrap()];
        bytes.extend(files.iter().map(|f| fs::read(f).unwrap()));
        bytes
    };
    assert_eq!(run("a"), run("b"));
}

#[test]
fn demo_gln_verifies_three_dimensional_case() {
    let out = wgt(&["demo-gln", "--n", "3", "--weight", "2,1,0", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("dim 8\n"));
}
