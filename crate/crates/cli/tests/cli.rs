//! End-to-end runs of the `cktrig` binary: output records, exit codes and the
//! error stream.

#![allow(non_snake_case)]

use std::process::{Command, Output};

use serde_json::Value;

fn cktrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cktrig"))
        .args(args)
        .env_remove("CKTRIG_TOL")
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

fn stderr_json(o: &Output) -> Value {
    let text = String::from_utf8_lossy(&o.stderr);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("stderr is not JSON ({e}): {text}"))
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

#[test]
fn euclidean_right_angle() {
    let o = cktrig(&["solve", "--geometry", "euclidean", "--given", "a=3,b=4,C=1.5707963"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert_eq!(r["status"], "solved");
    // the given right angle is truncated to 1e-7
    assert!((f(&r["sides"]["c"]) - 5.0).abs() < 1e-6);
    assert!((f(&r["area"]) - 6.0).abs() < 1e-6);
    assert!(f(&r["excesses"]["Delta"]).abs() < 1e-15);
    assert_eq!(r["existence"]["holds"], true);
}

#[test]
fn galilean_two_sides_give_partial_record() {
    let o = cktrig(&["solve", "--geometry", "galilean", "--given", "b=2,c=3"]);
    assert_eq!(o.status.code(), Some(3));
    let r = stdout_json(&o);
    assert_eq!(r["status"], "partial");
    assert_eq!(f(&r["sides"]["a"]), 5.0);
    assert!(r["angles"]["A"].is_null());
    let e = stderr_json(&o);
    assert_eq!(e["error"], "underdetermined");
    assert_eq!(e["exit_code"], 3);
}

#[test]
fn galilean_three_sides_are_underdetermined() {
    let o = cktrig(&["solve", "--geometry", "galilean", "--given", "a=5,b=2,c=3"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout_json(&o)["status"], "partial");
    let o = cktrig(&["solve", "--geometry", "galilean", "--given", "a=6,b=2,c=3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn de_sitter_suite_passes() {
    let args = ["identities", "--geometry", "de-sitter", "--samples", "500", "--seed", "7", "--tol", "1e-9"];
    let o = cktrig(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = stdout_json(&o);
    let ids = r["identities"].as_array().unwrap();
    assert!(ids.len() > 100);
    assert!(ids.iter().all(|i| i["status"] != "fail"));
    // same request, same bytes
    assert_eq!(cktrig(&args).stdout, o.stdout);
}

#[test]
fn appendix_suite_needs_no_geometry() {
    let o = cktrig(&["identities", "--suite", "appendix", "--samples", "300"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert!(r["k1"].is_null());
    assert!(r["identities"].as_array().unwrap().iter().all(|i| i["family"] == "appendix"));
}

#[test]
fn tolerance_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cktrig"))
        .args(["identities", "--geometry", "sphere", "--suite", "bestiarium", "--samples", "50"])
        .env("CKTRIG_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["tol"], 1e-300);
    assert_eq!(stderr_json(&o)["error"], "verification");
}

#[test]
fn existence_failure_exits_two() {
    let o = cktrig(&["solve", "--geometry", "euclidean", "--given", "a=10,b=1,c=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert_eq!(stderr_json(&o)["error"], "existence");
}

#[test]
fn parse_errors_exit_four() {
    let cases: [&[&str]; 6] = [
        &["solve", "--geometry", "euclidean", "--k1", "1", "--k2", "1", "--given", "a=1,b=1,C=1"],
        &["solve", "--geometry", "nowhere", "--given", "a=1,b=1,C=1"],
        &["solve", "--geometry", "euclidean", "--given", "a=1,q=2,C=1"],
        &["solve", "--geometry", "euclidean", "--given", "a=x,b=1,C=1"],
        &["solve", "--geometry", "euclidean"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = cktrig(args);
        assert_eq!(o.status.code(), Some(4), "{args:?}");
        assert_eq!(stderr_json(&o)["error"], "parse", "{args:?}");
    }
}

#[test]
fn text_is_a_rendering_of_json() {
    let args = ["solve", "--k1", "-1", "--k2", "1", "--given", "a=1,b=1,c=1"];
    let json = stdout_json(&cktrig(&args));
    let o = cktrig(&[&args[..], &["--output", "text"]].concat());
    let text = String::from_utf8(o.stdout).unwrap();
    let expect = format!("sides.c: {}", json["sides"]["c"]);
    assert!(text.lines().any(|l| l == expect), "{text}");
    let expect = format!("angles.C: {}", json["angles"]["C"]);
    assert!(text.lines().any(|l| l == expect), "{text}");
    assert!(text.lines().any(|l| l == "status: solved"));
}

#[test]
fn report_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("cktrig-report-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = cktrig(&["solve-ortho", "--geometry", "euclidean", "--given", "a=3,h=4", "--report-file", p]);
    assert_eq!(o.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(saved, stdout_json(&o));
    assert!((f(&saved["triangle"]["b"]) - 5.0).abs() < 1e-12);
    assert!((f(&saved["area"]) - 6.0).abs() < 1e-12);
}

#[test]
fn angle_side_angle_is_dual_of_side_angle_side() {
    let o = cktrig(&["solve", "--geometry", "sphere", "--given", "a=1.1,b=0.7,C=0.9"]);
    let r = stdout_json(&o);
    let (c, A, B) = (f(&r["sides"]["c"]), f(&r["angles"]["A"]), f(&r["angles"]["B"]));
    let given = format!("A={A:.17},B={B:.17},c={c:.17}");
    let back = stdout_json(&cktrig(&["solve", "--geometry", "sphere", "--given", &given]));
    assert!((f(&back["sides"]["a"]) - 1.1).abs() < 1e-12);
    assert!((f(&back["sides"]["b"]) - 0.7).abs() < 1e-12);
    assert!((f(&back["angles"]["C"]) - 0.9).abs() < 1e-12);
}

#[test]
fn verify_reports_loop_residuals() {
    let o = cktrig(&["verify", "--geometry", "de-sitter", "--given", "a=1.5,b=0.5,C=0.3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert_eq!(r["passed"], true);
    assert!(f(&r["max_residual"]) <= 1e-10);
    assert_eq!(r["point_loops"].as_array().unwrap().len(), 3);
    let h = &r["holonomy"];
    assert!((f(&h["angle"]) - f(&h["minus_delta"])).abs() <= 1e-10);
}

#[test]
fn tables_confirm_every_cell() {
    for which in ["2", "3", "4"] {
        let o = cktrig(&["table", "--which", which, "--samples", "40"]);
        assert_eq!(o.status.code(), Some(0), "table {which}");
        let r = stdout_json(&o);
        let n = r["summaries"].as_array().unwrap().len();
        assert_eq!(n, if which == "4" { 6 } else { 9 });
        assert!(f(&r["max_residual"]) <= 1e-11, "table {which}: {}", r["max_residual"]);
    }
}

#[test]
fn minkowskian_twin_defect() {
    let o = cktrig(&["spacetime", "--geometry", "minkowski", "--given", "a=3,b=1,c=1.5"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert_eq!(r["spacetime"], "minkowskian");
    assert!((f(&r["twin_defect"]) - 0.5).abs() <= 1e-12);
    assert!(f(&r["table4"]["max_residual"]) <= 1e-9);
}

#[test]
fn kinematical_units_rescale_labels() {
    let o = cktrig(&["spacetime", "--geometry", "de-sitter", "--units", "tau=2,c=3"]);
    let r = stdout_json(&o);
    assert_eq!(f(&r["geometry"]["k1"]), -0.25);
    assert!((f(&r["geometry"]["k2"]) + 1.0 / 9.0).abs() < 1e-16);
    let direct = stdout_json(&cktrig(&["spacetime", "--tau", "2", "--c", "3", "--sign", "-1"]));
    assert_eq!(direct["geometry"], r["geometry"]);
    // a positive second label has no kinematical reading
    assert_eq!(cktrig(&["spacetime", "--geometry", "sphere"]).status.code(), Some(2));
    assert_eq!(cktrig(&["spacetime", "--geometry", "sphere", "--units", "c=1"]).status.code(), Some(4));
}
