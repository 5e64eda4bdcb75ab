mod common;

use std::process::Command;

use common::problem_path;
use serde_json::Value;

fn chernlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chernlab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    problem_path(name).to_string_lossy().into_owned()
}

fn write_temp(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("chernlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn hilbert_json_rows() {
    let (code, out, _) = chernlab(&["hilbert", &path("e1"), "--max-power", "4", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let lengths: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["length"].as_str().unwrap())
        .collect();
    assert_eq!(lengths, ["3", "8", "15", "24"]);
    assert_eq!(v[3]["n"], 4);
}

#[test]
fn hilbert_table_for_single_plane() {
    let (code, out, _) = chernlab(&["hilbert", &path("e3"), "--max-power", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "   n  length\n   1  1\n   2  3\n   3  6\n   4  10\n");
}

#[test]
fn coeffs_json() {
    for (name, e, cm, sign) in [
        ("e1", vec!["2", "-1", "0"], false, "negative"),
        ("e2", vec!["2", "-1", "1", "0"], false, "negative"),
        ("e3", vec!["1", "0", "0"], true, "zero"),
    ] {
        let (code, out, err) = chernlab(&["coeffs", &path(name), "--json"]);
        assert_eq!(code, 0, "{name}: {err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["e"], serde_json::json!(e), "{name}");
        assert_eq!(v["cm"], cm);
        assert_eq!(v["chern_sign"], sign);
    }
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = chernlab(&["verify", &path("e1"), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["overall"], "pass");
    let (code, _, err) = chernlab(&["verify", &path("not_sop")]);
    assert_eq!(code, 3);
    assert!(err.contains("system_of_parameters"), "{err}");
}

#[test]
fn output_is_deterministic() {
    let a = chernlab(&["verify", &path("e4"), "--json"]);
    let b = chernlab(&["verify", &path("e4"), "--json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["identities"][0]["name"], "e0_additivity");
}

#[test]
fn force_suppresses_only_hypothesis_failures() {
    let (code, out, err) = chernlab(&["hilbert", &path("not_sop"), "--force", "--max-power", "2"]);
    // the quotient is not of finite length, so the computation itself fails
    assert_eq!(code, 1, "{out}{err}");
    assert!(err.starts_with("warning:"));
    let (code, _, _) = chernlab(&["coeffs", &path("e1"), "--force"]);
    assert_eq!(code, 0);
}

#[test]
fn schema_errors() {
    let (code, _, _) = chernlab(&["hilbert", "/nonexistent/problem.json"]);
    assert_eq!(code, 2);
    let p = write_temp(
        "typo.json",
        r#"{"variables":["x"],"ideals":[["x"]],"parameter":["x"]}"#,
    );
    assert_eq!(chernlab(&["hilbert", &p]).0, 2);
    let p = write_temp(
        "composite.json",
        r#"{"characteristic":100,"variables":["x","y"],"ideals":[["x"]],"parameters":["y"]}"#,
    );
    assert_eq!(chernlab(&["coeffs", &p]).0, 2);
    let p = write_temp(
        "implicit.json",
        r#"{"variables":["x","y"],"ideals":[["2x"]],"parameters":["y"]}"#,
    );
    assert_eq!(chernlab(&["coeffs", &p]).0, 2);
    let p = write_temp(
        "inhomogeneous.json",
        r#"{"variables":["x","y"],"ideals":[["x"]],"parameters":["y+y^2"]}"#,
    );
    assert_eq!(chernlab(&["coeffs", &p, "--force"]).0, 3);
}

#[test]
fn short_window_is_unstable() {
    let (code, _, err) = chernlab(&["coeffs", &path("e1"), "--max-power", "3"]);
    assert_eq!(code, 4);
    assert!(err.contains("increase --max-power"));
}

#[test]
fn betti_tables() {
    let (code, out, _) = chernlab(&["betti", "--d", "3", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("  3  3\neuler characteristic: 0\n"));
    let (_, out, _) = chernlab(&["betti", "--d", "4", "--n", "1", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["betti"], serde_json::json!(["1", "4", "6", "4", "1"]));
    assert_eq!(chernlab(&["betti", "--d", "3"]).0, 2);
}
