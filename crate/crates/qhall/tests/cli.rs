//! Integration tests for the command-line frontend: golden outputs, the
//! thin-adapter property (CLI output diffs clean against direct library
//! calls), determinism, and exit codes.

use std::process::{Command, Output};

fn qhall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhall"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qhall(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn cospin_golden_output() {
    let out = stdout(&["cospin", "--shape", "8,7,6,5,1", "--weight", "3,3,2,1", "--k", "3"]);
    assert_eq!(out, "3*q^5+17*q^4+33*q^3+31*q^2+18*q+5\n");
    let out = stdout(&["cospin", "--shape", "2,2", "--weight", "1,1", "--k", "2"]);
    assert_eq!(out, "q+1\n");
    // an empty tableau class prints the zero polynomial
    let out = stdout(&["cospin", "--shape", "2,1,1", "--weight", "2", "--k", "2"]);
    assert_eq!(out, "0\n");
}

#[test]
fn cli_is_a_thin_adapter() {
    // the CLI must print exactly what the library computes
    let shape: qhall::Partition = "6,5,3,2".parse().unwrap();
    let poly = qhall::ribbon::cospin_polynomial(&shape, &[2, 2], 4).unwrap();
    let out = stdout(&["cospin", "--shape", "6,5,3,2", "--weight", "2,2", "--k", "4"]);
    assert_eq!(out.trim_end(), poly.to_string());

    let tables = qhall::symfunc::SymTables::new(6);
    let expansion = tables.hl_schur(&"2,2,2".parse().unwrap()).unwrap();
    let out = stdout(&["hl", "--lambda", "2,2,2", "--basis", "s", "--budget", "6"]);
    assert_eq!(out.trim_end(), expansion.to_string());
}

#[test]
fn inv_poly_matches_cospin() {
    let out = stdout(&["inv-poly", "--shapes", "[[2],[3,2],[2]]", "--weight", "3,3,2,1"]);
    assert_eq!(out, "3*q^5+17*q^4+33*q^3+31*q^2+18*q+5\n");
}

#[test]
fn theta_prints_the_image_shapes() {
    let out = stdout(&[
        "theta",
        "--tuple",
        "[[1,4],[1,2],[1,2,3,3]]",
        "--weight",
        "3,2,2,1",
    ]);
    assert!(out.starts_with("shapes: [3] [3,2] [3,2,1,1] [3,3,1,1]\n"), "{out}");
    assert!(out.contains("cocharge: 2"), "{out}");
}

#[test]
fn hl_prime_normalization_prints_charge_values() {
    let out = stdout(&["hl", "--lambda", "2,1,1", "--normalization", "prime", "--budget", "4"]);
    let expected = "\
m[4]: q^3
m[3,1]: q^3+q^2+q
m[2,2]: q^3+q^2+2*q
m[2,1,1]: q^3+2*q^2+3*q+1
m[1,1,1,1]: q^3+3*q^2+5*q+3
";
    assert_eq!(out, expected);
}

#[test]
fn json_output_is_structured() {
    let out = stdout(&["cospin", "--shape", "2,2", "--weight", "1,1", "--k", "2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["polynomial"]["0"], 1);
    assert_eq!(value["polynomial"]["1"], 1);
    let out = stdout(&[
        "theta",
        "--tuple",
        "[[1,4],[1,2],[1,2,3,3]]",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["cocharge"], 2);
    assert_eq!(value["shapes"][0], serde_json::json!([3]));
}

#[test]
fn psi_round_trip_via_cli() {
    let forward = stdout(&[
        "psi", "--shape", "8,7,6,5,1", "--weight", "3,3,2,1", "--k", "3", "--index", "0",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&forward).unwrap();
    let tuple = value["tableaux"][0]["tuple"].to_string();
    let inverse = stdout(&["psi", "--inverse", "--tuple", &tuple, "--k", "3", "--json"]);
    let back: serde_json::Value = serde_json::from_str(&inverse).unwrap();
    assert_eq!(back["shape"], serde_json::json!([8, 7, 6, 5, 1]));
}

#[test]
fn output_is_deterministic() {
    let args =
        ["classes", "--shapes", "[[2],[2],[4]]", "--weight", "3,2,2,1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_goldens_exits_zero() {
    let out = qhall(&["verify", "--suite", "goldens"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("OK"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    // malformed partition literal
    let out = qhall(&["cospin", "--shape", "1,3", "--weight", "2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // weight mismatch
    let out = qhall(&["cospin", "--shape", "2,2", "--weight", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand (clap usage error)
    let out = qhall(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown verify suite
    let out = qhall(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fermionic_restricted_golden() {
    let out = stdout(&[
        "fermionic",
        "--lambda",
        "3,2,2,1",
        "--mu",
        "4,2,2",
        "--shapes",
        "[[2,1],[3,2],[3,3,1],[3,3,1,1]]",
    ]);
    assert_eq!(out, "q^5+3*q^4+4*q^3+3*q^2+q\n");
}
