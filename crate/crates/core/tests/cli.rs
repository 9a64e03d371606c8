//! End-to-end runs of the `drazin` binary on the bundled data files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn drazin(args: &[&str]) -> (String, String, i32) {
    let Output { stdout, stderr, status } = Command::new(env!("CARGO_BIN_EXE_drazin"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
        status.code().unwrap(),
    )
}

#[test]
fn index_and_minimal_polynomial() {
    let a = data("special_sum_a.txt");
    let (out, _, code) = drazin(&["index", &a]);
    assert_eq!(code, 0);
    assert!(out.contains("index: 3"));
    assert!(out.contains("rank sequence: 5 4 3 2 2"));
    assert!(out.contains("minimal polynomial: l^3 * (l + 2)^2"));

    let (out, _, code) = drazin(&["--json", "minpoly", &a]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "minpoly");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(v["outputs"][1]["value"], "l^5 + 4l^4 + 4l^3");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn group_inverse_refuses_high_index() {
    let (_, err, code) = drazin(&["group", &data("special_sum_a.txt")]);
    assert_eq!(code, 1);
    assert!(err.contains("index 3"));
}

#[test]
fn block_classification_of_zero_product_example() {
    let blocks = data("zero_product_1.txt");
    let (out, _, code) = drazin(&["block", &blocks]);
    assert_eq!(code, 0);
    assert!(out.contains("branch: bc-zero"));
    assert!(out.contains("index: 3"));
    assert!(!out.contains("check FAIL"));
    let (forced, _, code) = drazin(&["block", &blocks, "--branch", "orthogonal"]);
    assert_eq!(code, 0);
    assert!(forced.contains("index: 3"));
    let (_, _, code) = drazin(&["block", &blocks, "--branch", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn digraph_commands() {
    let (out, _, code) = drazin(&["digraph", &data("linked_star.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("index: 1"));
    let (out, _, code) = drazin(&["digraph", "--bipartite", &data("four_cycle.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("index: 0"));
    assert!(!out.contains("check FAIL"));
}

#[test]
fn verify_is_reproducible_and_reports_failures() {
    let args = ["verify", "--suite", "cline", "--cases", "20", "--seed", "3"];
    let (first, _, code) = drazin(&args);
    assert_eq!(code, 0);
    assert_eq!(drazin(&args).0, first);
    assert!(first.contains("check pass formula 20/20"));

    let (out, _, code) = drazin(&["verify", "--suite", "index-two-criterion", "--cases", "30"]);
    assert_eq!(code, 1);
    assert!(out.contains("check FAIL index-two-implies-criterion"));

    let (_, err, code) = drazin(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"));
}

#[test]
fn examples_and_tampering() {
    let (out, _, code) = drazin(&["examples"]);
    assert_eq!(code, 0);
    assert!(out.contains("6/6 examples reproduced"));
    let (out, _, code) = drazin(&["examples", "--tamper", "special-sum"]);
    assert_eq!(code, 1);
    assert!(out.contains("5/6 examples reproduced"));
}

#[test]
fn bad_input_is_a_usage_error() {
    let (_, err, code) = drazin(&["drazin", "/nonexistent/matrix.txt"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}
