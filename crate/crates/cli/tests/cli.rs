use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn covrough(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covrough"))
        .args(args.iter().map(|a| {
            if a.ends_with(".json") && !a.contains('/') {
                data(a).into_os_string()
            } else {
                a.into()
            }
        }))
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not json ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn stderr_error(out: &Output) -> (String, String) {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is a json error");
    (
        v["error"]["kind"].as_str().unwrap().to_string(),
        v["error"]["message"].as_str().unwrap().to_string(),
    )
}

#[test]
fn rough_cov_pass() {
    let out = covrough(&["check", "rough-cov", "example1.json", "example1_rough.json"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["check"], "rough-cov");
    assert_eq!(report["pass"], true);
    assert!(report["witness"].is_null());
}

#[test]
fn lower_and_upper_fail_on_third_axiom() {
    for (check, axiom) in [("lower-cov", "LI3"), ("upper-cov", "UI3")] {
        let out = covrough(&["check", check, "example1.json", "example1_not_rough.json"]);
        assert_eq!(code(&out), 1, "{check}");
        let report = stdout_json(&out);
        assert_eq!(report["failed_axiom"], axiom);
        assert_eq!(report["witness"]["I1"], serde_json::json!(["e"]));
    }
}

#[test]
fn matroid_missing_empty_set() {
    let out = covrough(&["check", "matroid", "four_block.json", "four_block_no_empty.json"]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["failed_axiom"], "I1");
    assert_eq!(report["witness"]["missing"], serde_json::json!([]));
}

#[test]
fn lattice_dot_is_deterministic() {
    let a = covrough(&["lattice", "two_block.json", "--format", "dot"]);
    let b = covrough(&["--format", "dot", "lattice", "two_block.json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let dot = String::from_utf8(a.stdout).unwrap();
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches("[label=").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 5);
}

#[test]
fn lattice_json_reports_atomicity_without_failing() {
    let out = covrough(&["lattice", "two_block.json"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["laws"]["pass"], true);
    assert_eq!(v["atomicity"]["pass"], false);
    assert_eq!(v["atomicity"]["witness"]["element"], serde_json::json!(["a", "b"]));
}

#[test]
fn dot_only_for_lattice() {
    let out = covrough(&["definable", "two_block.json", "--format", "dot"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_error(&out).0, "usage");
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_label_in_set_literal() {
    let out = covrough(&["approx", "two_block.json", "--set", "{a,z}"]);
    assert_eq!(code(&out), 2);
    let (kind, message) = stderr_error(&out);
    assert_eq!(kind, "unknown-label");
    assert!(message.contains('z'));
}

#[test]
fn approx_json() {
    let out = covrough(&["approx", "example1.json", "--set", "{ a , e }"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["lower"], serde_json::json!(["e"]));
    assert_eq!(v["upper"], serde_json::json!(["a", "d", "e"]));
}

#[test]
fn neighborhoods_json() {
    let out = covrough(&["neighborhoods", "example1.json"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["neighborhoods"][0]["neighborhood"], serde_json::json!(["a", "d"]));
    assert_eq!(v["neighborhoods"][4]["neighborhood"], serde_json::json!(["e"]));
}

#[test]
fn definable_round_trips_as_family_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let p = path.to_str().unwrap();
    let out = covrough(&["definable", "example1.json", "--output", p]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["family"].as_array().unwrap().len(), 16);
    // D itself is a rough matroid, and re-ingesting it yields the same file
    let out = covrough(&["check", "rough-cov", "example1.json", p]);
    assert_eq!(code(&out), 0);
    let again = covrough(&["definable", "example1.json"]);
    assert_eq!(again.stdout, std::fs::read(&path).unwrap());
}

#[test]
fn enumerate_matches_frozen_fixtures() {
    for name in ["two_block", "four_block"] {
        let out = covrough(&["enumerate", &format!("{name}.json"), "--seed", "0"]);
        assert_eq!(code(&out), 0);
        let frozen = std::fs::read(data(&format!("enumerate_{name}.json"))).unwrap();
        assert_eq!(out.stdout, frozen, "{name}");
    }
}

#[test]
fn randomized_commands_require_seed() {
    for verb in ["enumerate", "cross-check"] {
        let out = covrough(&[verb, "two_block.json"]);
        assert_eq!(code(&out), 2, "{verb}");
        assert!(stderr_error(&out).1.contains("--seed"));
    }
}

#[test]
fn direct_sum_of_two_rough_matroids() {
    let out = covrough(&[
        "direct-sum",
        "sum_left.json",
        "sum_left_family.json",
        "sum_right.json",
        "sum_right_family.json",
    ]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["family"].as_array().unwrap().len(), 18);
    assert_eq!(v["covering"].as_array().unwrap().len(), 7);
    assert_eq!(v["report"]["pass"], true);
}

#[test]
fn direct_sum_rejects_shared_labels() {
    let out = covrough(&[
        "direct-sum",
        "sum_left.json",
        "sum_left_family.json",
        "sum_left.json",
        "sum_left_family.json",
    ]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_error(&out).0, "not-disjoint");
}

#[test]
fn uniform_reports_loops() {
    let out = covrough(&["uniform", "four_block.json", "--r", "1"]);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["facts"]["family"], serde_json::json!([[], ["a"], ["c"]]));
    assert_eq!(v["facts"]["rough-matroid"], true);
    assert_eq!(v["failed_axiom"], "matroid-iff-singleton-neighborhoods");

    let out = covrough(&["uniform", "four_block.json", "--r", "4", "--strict"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_error(&out).0, "precondition");
}

#[test]
fn ci3prime_verdicts() {
    let out = covrough(&["ci3prime", "four_block.json", "four_block_rough.json"]);
    assert_eq!(code(&out), 0);
    let out = covrough(&["ci3prime", "four_block.json", "four_block_not_rough.json", "--format", "text"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stdout).unwrap().contains("CI3'"));
}

#[test]
fn extension_check() {
    let out = covrough(&["extension-check", "example1.json", "--d1", "{e}", "--d2", "{a,d,f}", "--d", "a"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["facts"]["blocked"], true);
    assert_eq!(v["facts"]["neighbor-criterion"], true);

    let out = covrough(&["extension-check", "example1.json", "--d1", "{b}", "--d2", "{a,d,f}", "--d", "a"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn cross_check_exit_codes() {
    let out = covrough(&["cross-check", "example1.json", "--seed", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["facts"]["seed"], 3);
    let out = covrough(&["cross-check", "two_block.json", "--seed", "3"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["failed_axiom"], "upper-fixpoints-equal-D");
}

#[test]
fn relation_checks() {
    let out = covrough(&["check", "lower-rel", "r2.json", "relation_family.json"]);
    assert_eq!(code(&out), 0);
    let out = covrough(&["check", "upper-rel", "r1.json", "relation_family.json"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["failed_axiom"], "UI2");
    let out = covrough(&["check", "rough-cov", "r1.json", "relation_family.json"]);
    assert_eq!(code(&out), 2);
    let out = covrough(&["check", "lower-rel", "example1.json", "example1_rough.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn jobs_do_not_change_output() {
    let a = covrough(&["cross-check", "example1.json", "--seed", "8", "--jobs", "1"]);
    let b = covrough(&["cross-check", "example1.json", "--seed", "8", "--jobs", "4"]);
    let c = covrough(&["cross-check", "example1.json", "--seed", "8"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn malformed_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"universe\": [\"a\"], \"covering\": [[\"a\"]").unwrap();
    let out = covrough(&["definable", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let (kind, message) = stderr_error(&out);
    assert_eq!(kind, "parse");
    assert!(message.contains("bad.json"));

    let out = covrough(&["definable", "/nonexistent/x.json"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_error(&out).0, "io");

    let mismatch = dir.path().join("fam.json");
    std::fs::write(&mismatch, r#"{"universe":["x","y"],"family":[[]]}"#).unwrap();
    let out = covrough(&["check", "matroid", "two_block.json", mismatch.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_error(&out).0, "universe-mismatch");
}

/// Every structure/family pair in the data directory exits with 0 or 1 and
/// a report whose `pass` field matches the exit code.
#[test]
fn exit_code_contract_over_corpus() {
    let pairs = [
        ("example1.json", "example1_rough.json"),
        ("example1.json", "example1_not_rough.json"),
        ("four_block.json", "four_block_rough.json"),
        ("four_block.json", "four_block_not_rough.json"),
        ("four_block.json", "four_block_no_empty.json"),
    ];
    for (s, f) in pairs {
        for check in ["matroid", "rough-cov", "lower-cov", "upper-cov", "matroid-cond"] {
            let out = covrough(&["check", check, s, f]);
            let report = stdout_json(&out);
            let expected = if report["pass"] == true { 0 } else { 1 };
            assert_eq!(code(&out), expected, "{check} {s} {f}");
            assert_eq!(report["check"], check);
        }
    }
}
