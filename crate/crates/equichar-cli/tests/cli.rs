//! End-to-end tests against the built binary: argument validation, exit
//! codes, format output, and byte stability.

use std::io::Write;
use std::process::{Command, Output};
use std::str::FromStr;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equichar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn payload(doc: &str) -> serde_json::Value {
    let value: serde_json::Value = serde_json::from_str(doc).expect("valid JSON output");
    value["payload"].clone()
}

#[test]
fn mgn_low_coefficients_json() {
    let doc = stdout_of(&["mgn", "--genus", "2", "--max-points", "2"]);
    let payload = payload(&doc);
    assert_eq!(payload["truncation_order"], 2);
    let coeffs = payload["coefficients"].as_array().unwrap();
    assert_eq!(coeffs[0]["terms"][0]["coefficient"], "1");
    assert_eq!(coeffs[1]["terms"][0]["coefficient"], "2");
    assert_eq!(coeffs[1]["terms"][0]["monomial"]["1"], 1);
}

#[test]
fn mgn_rejects_low_genus_with_explanation() {
    let out = run(&["mgn", "--genus", "1"]);
    assert_eq!(exit_code(&out), 1);
    let message = String::from_utf8_lossy(&out.stderr);
    assert!(message.contains("genus"), "{message}");
    assert!(message.contains("automorphisms"), "{message}");
}

#[test]
fn truncation_cap_needs_override() {
    let out = run(&["mgn", "--genus", "2", "--max-points", "31"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--uncapped"));
}

#[test]
fn usage_error_exit_code_is_1() {
    let out = run(&["mgn"]); // missing --genus
    assert_eq!(exit_code(&out), 1);
    let out = run(&["no-such-command"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["--version"])), 0);
}

#[test]
fn output_is_byte_stable_across_runs() {
    for args in [
        vec!["mgn", "--genus", "2", "--max-points", "4", "--basis", "schur"],
        vec!["coeffs", "--genus", "3", "--format", "csv"],
        vec!["coeffs", "--genus", "2", "--format", "latex"],
    ] {
        let first = stdout_of(&args);
        let second = stdout_of(&args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn coeffs_genus2_csv_table() {
    let csv = stdout_of(&["coeffs", "--genus", "2", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 11, "header plus ten records");
    assert_eq!(
        lines[0],
        "ord,exponents,quotient_genus,branch_points,classes,chi_orb,monodromy_count,n_value,denominator,coefficient"
    );
    assert_eq!(lines[1], "1,1:-2,2,0,,-1/240,1,1,1,-1/240");
    assert_eq!(lines[2], "2,1:6;2:-4,0,6,1+1+1+1+1+1,-6,1,1,1440,-1/240");
    let coefficients: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(
        coefficients,
        vec!["-1/240", "-1/240", "1/12", "-1/12", "-1/8", "2/5", "1/6", "-1/12", "1/4", "2/5"]
    );
}

#[test]
fn coeffs_genus2_latex_product_lines() {
    let latex = stdout_of(&["coeffs", "--genus", "2", "--format", "latex"]);
    let lines: Vec<&str> = latex.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "-\\frac{1}{240}\\,(1+p_{1}t)^{-2}");
    assert_eq!(
        lines[1],
        "- \\frac{1}{240}\\,(1+p_{1}t)^{6}(1+p_{2}t^{2})^{-4}"
    );
    assert_eq!(
        lines[9],
        "+ \\frac{2}{5}\\,(1+p_{1}t)(1+p_{2}t^{2})(1+p_{5}t^{5})(1+p_{10}t^{10})^{-1}"
    );
}

#[test]
fn coeffs_genus3_contains_closed_forms() {
    let doc = stdout_of(&["coeffs", "--genus", "3"]);
    let payload = payload(&doc);
    let records = payload["records"].as_array().unwrap();
    let identity = records
        .iter()
        .find(|r| r["ord"] == 1)
        .expect("identity row");
    assert_eq!(identity["coefficient"], "1/1008");
    let hyperelliptic = records
        .iter()
        .find(|r| r["ord"] == 2 && r["exponents"]["1"] == 8)
        .expect("hyperelliptic row");
    assert_eq!(hyperelliptic["coefficient"], "-1/672");
}

#[test]
fn nfun_reference_and_verification() {
    let doc = stdout_of(&["nfun", "5", "1", "1", "1"]);
    assert_eq!(payload(&doc)["value"], "12");

    let doc = stdout_of(&["nfun", "6", "2", "2", "3", "3", "--verify"]);
    let p = payload(&doc);
    assert_eq!(p["value"], "2");
    assert_eq!(p["bruteforce"], "2");
    assert_eq!(p["verified"], true);

    let out = run(&["nfun", "6", "4"]);
    assert_eq!(exit_code(&out), 1, "4 does not divide 6");
}

#[test]
fn nfun_empty_class_list() {
    let doc = stdout_of(&["nfun", "7"]);
    assert_eq!(payload(&doc)["value"], "1");
}

#[test]
fn orbchi_values_and_stability_error() {
    assert_eq!(payload(&stdout_of(&["orbchi", "0", "6"]))["value"], "-6");
    assert_eq!(payload(&stdout_of(&["orbchi", "1", "2"]))["value"], "1/12");
    let out = run(&["orbchi", "1", "0"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unstable"));
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write");
    file
}

#[test]
fn confspace_group_action_swap() {
    let file = write_temp(
        r#"{"group_order": 2, "elements": [
            {"label": "e", "chi_by_orbit_length": {"1": 2}},
            {"label": "swap", "chi_by_orbit_length": {"2": 2}}]}"#,
    );
    let doc = stdout_of(&[
        "confspace",
        "--input",
        file.path().to_str().unwrap(),
        "--max-points",
        "2",
    ]);
    let p = payload(&doc);
    // (1/2)[(1+p1 t)^2 + (1+p2 t^2)]: t^2 coefficient (p1^2 + p2)/2
    let t2 = p["coefficients"][2]["terms"].as_array().unwrap();
    assert_eq!(t2.len(), 2);
    assert_eq!(t2[0]["monomial"]["2"], 1);
    assert_eq!(t2[0]["coefficient"], "1/2");
    assert_eq!(t2[1]["monomial"]["1"], 2);
    assert_eq!(t2[1]["coefficient"], "1/2");
}

#[test]
fn confspace_strata_match_mgn() {
    // the ten genus-2 strata, weights and exponents as published
    let file = write_temp(
        r#"{"strata": [
            {"weight": "-1/240", "exponents": {"1": -2}},
            {"weight": "-1/240", "exponents": {"1": 6, "2": -4}},
            {"weight": "2/5",    "exponents": {"1": 3, "5": -1}},
            {"weight": "2/5",    "exponents": {"1": 1, "2": 1, "5": 1, "10": -1}},
            {"weight": "1/6",    "exponents": {"1": 2, "2": 1, "6": -1}},
            {"weight": "-1/12",  "exponents": {"1": 4, "3": -2}},
            {"weight": "-1/12",  "exponents": {"2": 2, "3": 2, "6": -2}},
            {"weight": "1/12",   "exponents": {"1": 2, "2": -2}},
            {"weight": "1/4",    "exponents": {"1": 2, "4": 1, "8": -1}},
            {"weight": "-1/8",   "exponents": {"1": 2, "2": 2, "4": -2}}]}"#,
    );
    let confspace = stdout_of(&[
        "confspace",
        "--input",
        file.path().to_str().unwrap(),
        "--max-points",
        "6",
    ]);
    let mgn = stdout_of(&["mgn", "--genus", "2", "--max-points", "6"]);
    assert_eq!(
        payload(&confspace)["coefficients"],
        payload(&mgn)["coefficients"],
        "strata route and moduli route emit identical series"
    );
}

#[test]
fn confspace_empty_strata_is_zero_series() {
    let file = write_temp(r#"{"strata": []}"#);
    let doc = stdout_of(&[
        "confspace",
        "--input",
        file.path().to_str().unwrap(),
        "--max-points",
        "3",
    ]);
    let coeffs = payload(&doc)["coefficients"].clone();
    for n in 0..=3 {
        assert_eq!(coeffs[n]["terms"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn confspace_schema_violation_is_usage_error() {
    let file = write_temp(r#"{"neither": []}"#);
    let out = run(&["confspace", "--input", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);

    let out = run(&["confspace", "--input", "/nonexistent/path.json"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn confspace_divisibility_violation_is_computation_error() {
    let file = write_temp(
        r#"{"group_order": 1, "elements": [
            {"label": "e", "chi_by_orbit_length": {"2": 3}}]}"#,
    );
    let out = run(&["confspace", "--input", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not divisible"));
}

#[test]
fn selftest_exit_codes() {
    let out = run(&["selftest"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("self-test passed"));

    for flip in ["monodromy-exponent", "quotient-genus", "chi-orb-formula"] {
        let out = run(&["selftest", "--flip", flip]);
        assert_eq!(exit_code(&out), 2, "flip {flip}");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("FAIL"), "flip {flip}: {text}");
    }
}

#[test]
fn rationals_round_trip_through_json() {
    let doc = stdout_of(&["coeffs", "--genus", "2"]);
    let records = payload(&doc)["records"].clone();
    for record in records.as_array().unwrap() {
        for field in ["chi_orb", "coefficient"] {
            let text = record[field].as_str().unwrap();
            let parsed = equichar::arith::Rational::from_str(text).expect("parseable rational");
            assert_eq!(parsed.to_string(), text, "canonical form round-trips");
        }
    }
}
