//! End-to-end runs of the `qfock` binary: exit codes, file formats and golden reports.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn qfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfock")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

/// Compares against a checked-in file; `QFOCK_BLESS=1` rewrites it instead.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("QFOCK_BLESS").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn certify_exit_codes() {
    let ok = qfock(&["certify", "--n", "3", "--levels", "1", "--families", "cw.B+1"]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stderr));

    let capped = qfock(&["certify", "--n", "3", "--levels", "99"]);
    assert_eq!(code(&capped), 2);
    assert!(String::from_utf8_lossy(&capped.stderr).contains("5050"));

    let bad_root = qfock(&["certify", "--embed", "3x2", "--levels", "1", "--root", "6"]);
    assert_eq!(code(&bad_root), 2);

    let no_target = qfock(&["certify", "--levels", "1"]);
    assert_eq!(code(&no_target), 2);
}

#[test]
fn certify_json_is_reproducible_without_timing() {
    let args = ["certify", "--n", "3", "--levels", "1,2", "--families", "cw.B+,cw.M0,rll.+-", "--no-timing"];
    let first = stdout(&qfock(&args));
    let second = stdout(&qfock(&args));
    assert_eq!(first, second);
    assert_golden("certify_n3.json", &first);

    let doc: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["summary"]["status"], "pass");
    // the interpretation family is vacuous at n = 3, so it passes with nothing checked
    let b5 = doc["relations"].as_array().unwrap().iter().find(|r| r["id"] == "cw.B+5").unwrap();
    assert_eq!(b5["indices_checked"], 0);
    assert_eq!(b5["status"], "pass");
}

#[test]
fn certify_text_golden() {
    let out = qfock(&[
        "certify",
        "--embed",
        "3x2",
        "--levels",
        "1",
        "--families",
        "commuting",
        "--no-timing",
        "--format",
        "text",
    ]);
    assert_eq!(code(&out), 0);
    assert_golden("certify_3x2.txt", &stdout(&out));
}

#[test]
fn certify_writes_file_and_summary_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = qfock(&["certify", "--k1", "2", "--k2", "2", "--levels", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("pass:"));
    let doc = read_json(&path);
    assert_eq!(doc["config"]["k1"], 2);
    assert_eq!(doc["config"]["root"], 8);
    assert!(doc["timing"]["total_seconds"].is_number());
}

#[test]
fn embed_routes_agree_for_three_by_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let out =
        qfock(&["embed", "--k1", "3", "--k2", "2", "--level", "1", "--route", "all", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "route diff: identical");
    let doc = read_json(&path);
    assert_eq!(doc["route_diff"], "identical");
    assert_eq!(doc["bundles"].as_array().unwrap().len(), 3);
    assert_eq!(doc["root"], 12);
}

#[test]
fn embed_level_zero_is_one_dimensional() {
    let doc: Value =
        serde_json::from_str(&stdout(&qfock(&["embed", "--k1", "2", "--k2", "2", "--level", "0", "--route", "boson"])))
            .unwrap();
    let ops = doc["bundles"][0]["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 6);
    for op in ops {
        assert_eq!(op["operator"]["domain"][0]["level"], 0);
        // hops vanish on the vacuum; number differences are zero there too
        assert!(op["operator"]["entries"].as_array().unwrap().is_empty(), "{}", op["name"]);
    }
}

#[test]
fn embed_single_row_grid_has_no_x_family() {
    let doc: Value =
        serde_json::from_str(&stdout(&qfock(&["embed", "--k1", "1", "--k2", "4", "--level", "1", "--route", "weyl"])))
            .unwrap();
    let names: Vec<&str> =
        doc["bundles"][0]["operators"].as_array().unwrap().iter().map(|o| o["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["Z+(1)", "Z+(2)", "Z+(3)", "Z-(1)", "Z-(2)", "Z-(3)", "Hs(1)", "Hs(2)", "Hs(3)"]);
}

#[test]
fn report_merges_and_propagates_failure() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(
        code(&qfock(&["certify", "--n", "3", "--levels", "1", "--families", "cw.B+1", "--out", a.to_str().unwrap()])),
        0
    );
    assert_eq!(
        code(&qfock(&[
            "certify",
            "--embed",
            "2x2",
            "--levels",
            "1",
            "--families",
            "commuting",
            "--out",
            b.to_str().unwrap()
        ])),
        0
    );

    let merged = qfock(&["report", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code(&merged), 0);
    let table = stdout(&merged);
    assert!(table.contains("n=3 m=1") && table.contains("2x2 m=1"));
    assert!(table.contains("overall: PASS"));

    // A hand-edited failing relation must surface in the table with its witness.
    let mut doc = read_json(&a);
    let rel = &mut doc["relations"][0];
    rel["status"] = "fail".into();
    rel["witness"] =
        serde_json::json!({ "indices": "i=1,k=2,j=3", "row": "|1,0,0>", "column": "|0,0,1>", "value": "1" });
    doc["summary"]["status"] = "fail".into();
    doc["summary"]["passed"] = 0.into();
    doc["summary"]["failed"] = 1.into();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let mixed = qfock(&["report", b.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(code(&mixed), 1);
    let table = stdout(&mixed);
    assert!(table.contains("FAIL") && table.contains("overall: FAIL"));
    assert!(table.contains("i=1,k=2,j=3"));

    assert_eq!(code(&qfock(&["report"])), 2);
    assert_eq!(code(&qfock(&["report", dir.path().join("missing.json").to_str().unwrap()])), 2);
}

#[test]
fn dimension_cap_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_qfock"))
        .args(["certify", "--n", "3", "--levels", "2", "--families", "cw.M0"])
        .env("QFOCK_DIM_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_qfock"))
        .args(["certify", "--n", "3", "--levels", "2", "--families", "cw.M0"])
        .env("QFOCK_DIM_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
