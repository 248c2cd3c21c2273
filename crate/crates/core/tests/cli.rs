//! End-to-end tests of the `oddpow` binary: output formats, exit codes,
//! export files, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddpow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeffs_text_renders_the_identity() {
    let out = run(&["coeffs", "--m", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("140"));
    assert!(text.contains("14"));
    assert!(text.contains("+ 1"));
    assert!(text.starts_with("x^7 ="));
}

#[test]
fn coeffs_m6_notes_the_published_discrepancy() {
    let out = run(&["coeffs", "--m", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("12012"));
    assert!(text.contains("51480"));
}

#[test]
fn coeffs_json_row() {
    let out = run(&["coeffs", "--m", "0", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"m":0,"coefficients":[{"r":0,"value":"1"}]}"#
    );
}

#[test]
fn coeffs_missing_m_is_a_usage_error() {
    let out = run(&["coeffs"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["coeffs", "--m", "1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_modes_pass() {
    let out = run(&["verify", "--m", "2", "--mode", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("passed"));

    let out = run(&["verify", "--m", "1", "--x-max", "7", "--mode", "numeric"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "--m", "9", "--x-max", "50", "--mode", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("numeric"));
    assert!(text.contains("symbolic"));
    assert!(text.contains("symmetry"));
}

#[test]
fn verify_json_report_shape() {
    let out = run(&["verify", "--m", "2", "--mode", "symmetry", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["m"], 2);
    assert_eq!(v["mode"], "symmetry");
    assert_eq!(v["passed"], true);
    assert!(v["first_failure"].is_null());
}

#[test]
fn verify_rejects_csv() {
    let out = run(&["verify", "--m", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_prints_polynomial_and_verdict() {
    let out = run(&["expand", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("expansion: x^5"));
    assert!(text.contains("verdict: equal"));
}

#[test]
fn bernoulli_values() {
    for (n, expected) in [("1", "1/2"), ("7", "0"), ("8", "-1/30")] {
        let out = run(&["bernoulli", "--n", n]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), expected);
    }
    let out = run(&["bernoulli", "--n", "4", "--format", "json"]);
    assert_eq!(stdout(&out).trim(), r#"{"n":4,"value":"-1/30"}"#);
}

#[test]
fn export_csv_to_stdout() {
    let out = run(&["export", "--m-max", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "m,r,value\n0,0,1\n1,0,1\n1,1,6\n");
}

#[test]
fn export_text_is_the_flattened_listing() {
    let out = run(&["export", "--m-max", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 21);
    assert_eq!(text.lines().next(), Some("1 1"));
    assert_eq!(text.lines().last(), Some("21 2772"));
}

#[test]
fn export_json_round_trips_and_writes_bfile() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.json");
    let out = run(&[
        "export",
        "--m-max",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let bytes = std::fs::read(&path).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&value).unwrap();
    reserialized.push('\n');
    assert_eq!(reserialized.into_bytes(), bytes);
    assert_eq!(value.as_array().unwrap().len(), 5);
    assert_eq!(value[0]["coefficients"][0]["value"], "1");

    let listing = std::fs::read_to_string(dir.path().join("triangle.json.bfile")).unwrap();
    assert_eq!(listing.lines().count(), 15);
}

#[test]
fn export_unwritable_path_is_an_io_error() {
    let out = run(&[
        "export",
        "--m-max",
        "1",
        "--out",
        "/nonexistent-dir/out.txt",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selftest_passes_and_reports() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all checks passed"));
    assert!(text.contains("12012"));
    assert!(text.contains("51480"));
}

#[test]
fn invocations_are_deterministic() {
    for args in [
        vec!["coeffs", "--m", "8", "--format", "json"],
        vec!["export", "--m-max", "6", "--format", "csv"],
        vec!["selftest"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
