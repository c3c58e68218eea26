//! End-to-end tests of the `nsgp` binary: output shapes, JSON schema,
//! and the exit-code contract (0 success, 1 verification failures,
//! 2 unusable requests).

use std::process::{Command, Output};

fn nsgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("stdout is JSON")
}

#[test]
fn info_text_lists_invariants() {
    let out = nsgp(&["info", "--set", "0,5,7,8,10,12->"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("semigroup: 0,5,7,8,10,12->"));
    assert!(text.contains("frobenius: 11"));
    assert!(text.contains("genus: 7"));
    assert!(text.contains("type: 2"));
    assert!(text.contains("pf: 9,11"));
    assert!(text.contains("symmetric: false"));
}

#[test]
fn info_json_matches_schema() {
    let out = nsgp(&["info", "--gens", "5,7,9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["small_elements"][0], 0);
    assert_eq!(v["frobenius"], 13);
    assert_eq!(v["genus"], 8);
    assert_eq!(v["type"], 2);
    assert_eq!(v["pf"], serde_json::json!([11, 13]));
    assert_eq!(v["flags"]["symmetric"], false);
    assert_eq!(v["flags"]["pseudo_symmetric"], false);
    assert_eq!(v["flags"]["almost_symmetric"], false);
}

#[test]
fn info_json_uses_nulls_for_the_natural_numbers() {
    let out = nsgp(&["info", "--gens", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["small_elements"], serde_json::json!([0]));
    assert_eq!(v["frobenius"], -1);
    assert_eq!(v["genus"], 0);
    assert!(v["type"].is_null());
    assert!(v["pf"].is_null());
    assert!(v["flags"]["symmetric"].is_null());
    assert!(v["flags"]["pseudo_symmetric"].is_null());
    assert!(v["flags"]["almost_symmetric"].is_null());
}

#[test]
fn info_reports_d_symmetry_on_request() {
    let out = nsgp(&["info", "--set", "0,6,9,10,12,14->", "--d", "3,4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("3-symmetric: true"));
    assert!(text.contains("4-symmetric: false"));
    let out = nsgp(&[
        "info", "--set", "0,6,9,10,12,14->", "--d", "3,4", "--format", "json",
    ]);
    let v = json(&out);
    assert_eq!(v["flags"]["d_symmetric"]["3"], true);
    assert_eq!(v["flags"]["d_symmetric"]["4"], false);
    // without --d the key is absent
    let out = nsgp(&["info", "--set", "0,6,9,10,12,14->", "--format", "json"]);
    assert!(json(&out)["flags"].get("d_symmetric").is_none());
    // d below 1 is a usage error
    let out = nsgp(&["info", "--gens", "3,5", "--d", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quotient_prints_the_notation() {
    let out = nsgp(&["quotient", "--set", "0,6,9,10,12,14->", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0,2->");
    let out = nsgp(&["quotient", "--gens", "5,7", "--d", "2", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["quotient"], "0,5,6,7,10->");
    assert_eq!(v["frobenius"], 9);
    assert_eq!(v["genus"], 6);
}

#[test]
fn multiple_reports_the_constructed_fold() {
    let out = nsgp(&["multiple", "--set", "0,3,6->", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("fold: 0,8,9,10,11,13,14,16->"));
    assert!(text.contains("genus: 9"));
    assert!(text.contains("frobenius: 15"));
    let out = nsgp(&["multiple", "--set", "0,3,6->", "--d", "3", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["fold"], "0,8,9,10,11,13,14,16->");
    assert_eq!(v["genus"], 9);
    assert_eq!(v["is_min_genus"], true);
}

#[test]
fn multiples_enumerates_folds() {
    let out = nsgp(&["multiples", "--set", "0,3,6->", "--d", "3", "--f-bound", "15"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "0,7,9,10,11,13,14,16->"));
    assert!(text.lines().any(|l| l == "0,8,9,10,11,13,14,16->"));
    let out = nsgp(&[
        "multiples", "--set", "0,3,6->", "--d", "3", "--f-bound", "15", "--format", "json",
    ]);
    let v = json(&out);
    assert_eq!(v["count"].as_u64().unwrap() as usize, v["folds"].as_array().unwrap().len());
    assert!(v["count"].as_u64().unwrap() >= 2);
}

#[test]
fn duplicate_builds_the_double() {
    let out = nsgp(&["duplicate", "--set", "0,5,7,8,10,12->", "--b", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("double: 0,10,13,14,16,17,20,23,24,26,27,28,29,30,31,32,33,34,36->"));
    assert!(text.contains("genus: 18"));
    assert!(text.contains("frobenius: 35"));
}

#[test]
fn duplicate_refuses_invalid_b() {
    let out = nsgp(&["duplicate", "--set", "0,5,7,8,10,12->", "--b", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
    let out = nsgp(&["duplicate", "--set", "0,5,7,8,10,12->", "--b", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn doubles_lists_every_valid_b() {
    let out = nsgp(&["doubles", "--set", "0,5,7,8,10,12->", "--b-limit", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("b=13 genus=18 frobenius=35"));
    // a limit below frobenius + 2 cannot rule the family out
    let out = nsgp(&["doubles", "--set", "0,5,7,8,10,12->", "--b-limit", "12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn duplicate_defaults_to_the_least_valid_b() {
    let out = nsgp(&["duplicate", "--set", "0,5,7,8,10,12->"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("b: 13"));
    assert!(text.contains("genus: 18"));
}

#[test]
fn doubles_min_genus_reports_the_minimum() {
    let out = nsgp(&["doubles", "--min-genus", "--set", "0,5,7,8,10,12->"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("b=13 genus=18 frobenius=35"));
    assert!(text.contains("double=0,10,13,14,16,17,20,23,24,26,27,28,29,30,31,32,33,34,36->"));
    let out = nsgp(&[
        "doubles", "--min-genus", "--set", "0,5,7,8,10,12->", "--format", "json",
    ]);
    let v = json(&out);
    assert_eq!(v["b"], 13);
    assert_eq!(v["genus"], 18);
    // the two selection modes are mutually exclusive, and one is required
    let out = nsgp(&[
        "doubles", "--min-genus", "--b-limit", "13", "--set", "0,5,7,8,10,12->",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = nsgp(&["doubles", "--set", "0,5,7,8,10,12->"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn frobenius_quotient_applies_the_formula() {
    let out = nsgp(&[
        "frobenius-quotient", "--set", "0,6,9,10,12,14->", "--d", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["x"], 10);
    assert_eq!(v["frobenius"], 1);
    // not 4-symmetric: refused
    let out = nsgp(&["frobenius-quotient", "--set", "0,6,9,10,12,14->", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("4-symmetric"));
}

#[test]
fn verify_single_suite_passes() {
    let out = nsgp(&["verify", "--suite", "core-vs-brute", "--max-genus", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suite: core-vs-brute"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn verify_accepts_a_d_list() {
    let out = nsgp(&[
        "verify", "--suite", "min-genus-dfold", "--max-genus", "6", "--d", "2,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: PASS"));
    // fold multipliers below 2 are refused
    let out = nsgp(&["verify", "--suite", "min-genus-dfold", "--d", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_reports_structure() {
    let out = nsgp(&[
        "verify", "--suite", "d-symmetric-frobenius", "--max-genus", "5", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "d-symmetric-frobenius");
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["instances_checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_unknown_suite_exits_two() {
    let out = nsgp(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no-such-suite"));
}

#[test]
fn usage_errors_exit_two() {
    // missing required semigroup input
    let out = nsgp(&["info"]);
    assert_eq!(out.status.code(), Some(2));
    // gens and set are mutually exclusive
    let out = nsgp(&["info", "--gens", "3,5", "--set", "0,3,5->"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed notation
    let out = nsgp(&["info", "--set", "0,5,x->"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
    // generators with a common factor
    let out = nsgp(&["info", "--gens", "4,6"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = nsgp(&["squba"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn multiples_refuses_impossible_bounds() {
    // f_bound below d * f cannot contain any d-fold
    let out = nsgp(&["multiples", "--set", "0,3,6->", "--d", "3", "--f-bound", "14"]);
    assert_eq!(out.status.code(), Some(2));
    // a bound leaving too many free positions is refused, not attempted
    let out = nsgp(&["multiples", "--set", "0,5,6,7,10->", "--d", "4", "--f-bound", "36"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn conductor_guardrail_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(["info", "--gens", "1048573,1048571"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(["quotient", "--gens", "5,7", "--d", "2"])
        .env("NSGP_MAX_CONDUCTOR", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn help_and_version_exit_zero() {
    let out = nsgp(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("frobenius-quotient"));
    let out = nsgp(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}
