use std::io::Write;
use std::process::{Command, Output};

use narydiff::Rational;
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_narydiff"));
    cmd.env_remove("NARYDIFF_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let out = bin()
        .args(args)
        .args(["--output", "json"])
        .output()
        .unwrap();
    (
        serde_json::from_slice(&out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn diff_text_output() {
    let out = run(&["diff", "--points", "0,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("difference: 2"), "{text}");
}

#[test]
fn json_keys_are_fixed() {
    let (v, code) = run_json(&["doubled", "--points", "0,1,2", "--pivot", "3"]);
    assert_eq!(code, 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "backend",
            "command",
            "identity_checks",
            "inputs",
            "results",
            "timing_ms"
        ]
    );
    assert_eq!(v["results"]["det_doubled"], "4");
    assert_eq!(v["results"]["expected"], "4");
}

#[test]
fn rationals_round_trip_through_json() {
    let (v, code) = run_json(&["partfrac", "--points", "1/3,-2/7,0.125,5"]);
    assert_eq!(code, 0);
    let coeffs: Vec<Rational> = v["results"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    let roots = narydiff::PointList::new(
        ["1/3", "-2/7", "1/8", "5"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect(),
    )
    .unwrap();
    let expected: Vec<Rational> = narydiff::expand_reciprocal(&roots)
        .unwrap()
        .coefficients()
        .cloned()
        .collect();
    assert_eq!(coeffs, expected);
    assert_eq!(v["inputs"]["points"][2], "1/8");
}

#[test]
fn points_file_with_comments() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# three quantities\n5\n\n3\n# last one\n8").unwrap();
    let (v, code) = run_json(&["distance", "--points-file", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["distance"], "30");
}

#[test]
fn missing_points_file_is_usage_error() {
    let out = run(&["diff", "--points-file", "/nonexistent/narydiff-points"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_values_accepted() {
    let (v, code) = run_json(&["decompose", "--points", "-1,-1/2,3", "--pivot", "-7"]);
    assert_eq!(code, 0);
    assert_eq!(v["identity_checks"][0]["holds"], true);
}

#[test]
fn usage_errors_print_synopsis() {
    let out = run(&["decompose", "--points", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("Usage: narydiff"), "{err}");
    assert_eq!(run(&["bench", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["diff", "--points", "1,2", "--backend", "quad"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--n-max", "5", "--cases", "200", "--seed", "7"];
    let (a, code_a) = run_json(&args);
    let (b, code_b) = run_json(&args);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn verify_binary_case() {
    let (v, code) = run_json(&["verify", "--n-max", "2", "--cases", "1", "--seed", "1"]);
    assert_eq!(code, 0);
    for check in v["results"]["checks"].as_array().unwrap() {
        assert_eq!(check["passed"], 1);
        assert!(check["counterexample"].is_null());
    }
}

#[test]
fn seed_env_overrides_flag() {
    let out = bin()
        .args([
            "verify", "--n-max", "3", "--cases", "2", "--seed", "1", "--output", "json",
        ])
        .env("NARYDIFF_SEED", "42")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["inputs"]["seed"], 42);
    let (direct, _) = run_json(&["verify", "--n-max", "3", "--cases", "2", "--seed", "42"]);
    assert_eq!(strip_timing(v), strip_timing(direct));

    let out = bin()
        .args(["verify", "--n-max", "3"])
        .env("NARYDIFF_SEED", "not-a-seed")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_smoke() {
    let (v, code) = run_json(&[
        "bench",
        "--n",
        "10,20",
        "--repeats",
        "2",
        "--backend",
        "float",
    ]);
    assert_eq!(code, 0);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["n"], 20);
    assert!(rows[0]["product_median_ms"].as_f64().unwrap() >= 0.0);
    let (_, code) = run_json(&["bench", "--n", "6", "--repeats", "1", "--backend", "exact"]);
    assert_eq!(code, 0);
    assert_eq!(
        run(&["bench", "--n", "2001", "--backend", "float"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn theta_json_complex_shape() {
    let (v, code) = run_json(&["theta", "--points", "1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["value"]["re"], 1.0);
    assert_eq!(v["results"]["value"]["im"], 0.0);
    assert_eq!(v["identity_checks"][0]["name"], "translation_invariance");
    assert_eq!(v["identity_checks"][0]["holds"], true);
}
