use std::process::{Command, Output};

use serde_json::Value;

fn qcasimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcasimir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn roots_b2_json() {
    let out = qcasimir(&["roots", "--type", "B", "--rank", "2", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["type"], "B");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["rho"], serde_json::json!(["3/2", "1/2"]));
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 4);
}

#[test]
fn invalid_rank_is_a_usage_error() {
    let out = qcasimir(&["roots", "--type", "D", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = qcasimir(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hook_suite_passes_for_c3() {
    let out = qcasimir(&["verify", "--suite", "hooks-c", "--type", "C", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["suite"], "hooks-c");
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_is_deterministic_given_seed() {
    let args = ["verify", "--suite", "oracle", "--type", "B", "--rank", "2", "--seed", "7", "--points", "4"];
    let a = qcasimir(&args);
    let b = qcasimir(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
}

#[test]
fn eigenvalue_routes_agree() {
    let out = qcasimir(&[
        "eig", "--type", "B", "--rank", "2", "--lambda", "1/2,1/2", "--ell", "2", "--format", "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    assert_eq!(v["direct"], v["via_image"]);
}

#[test]
fn undivided_image_exits_with_verification_failure() {
    // the order-1 numerator is not divisible by (q^-1 - q) in this basis;
    // the fraction form is always available
    let out = qcasimir(&["hc", "--type", "B", "--rank", "2", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qcasimir(&["hc", "--type", "B", "--rank", "2", "--ell", "1", "--fraction", "--format", "json"]);
    assert!(out.status.success());
    assert!(json(&out)["denominator"].is_array());
}

#[test]
fn g0_of_b2_is_the_printed_constant() {
    let out = qcasimir(&["gnk", "--type", "B", "--rank", "2", "--k", "0", "--format", "json"]);
    assert!(out.status.success());
    let body = json(&out)["body"].clone();
    let terms = body.as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["weight"], serde_json::json!([0, 0]));
    // q^3 + q + 1 + q^-1 + q^-3 in quarter exponents
    let exps: Vec<i64> = terms[0]["coeff"].as_array().unwrap().iter().map(|t| t["e"].as_i64().unwrap()).collect();
    let mut sorted = exps.clone();
    sorted.sort();
    assert_eq!(sorted, vec![-12, -4, 0, 4, 12]);
}

#[test]
fn solve_basis_reports_extra_generators() {
    let out = qcasimir(&["solve-basis", "--type", "D", "--rank", "4", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["certificate"]["solved_range"], 2);
    assert_eq!(v["certificate"]["extra_generators"].as_array().unwrap().len(), 2);
}

#[test]
fn text_and_latex_render() {
    for fmt in ["text", "latex"] {
        let out = qcasimir(&["char", "--type", "C", "--rank", "3", "--lambda", "1,0,0", "--format", fmt]);
        assert!(out.status.success());
        assert!(!out.stdout.is_empty());
    }
}
