use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn koszul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(args)
        .env_remove("KOSZUL_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str, body: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_example1() {
    let out = koszul(&["validate", &data("example1.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["results"]["sullivan"]["ok"], true);
    assert_eq!(r["results"]["minimal"]["minimal"], false);
    assert_eq!(r["results"]["d_squared"]["pass"], true);
}

#[test]
fn toomer_example3() {
    let out = koszul(&["toomer", &data("example3.json"), "--max-degree", "8", "--max-wordlength", "6", "--subset", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["results"]["candidate"], 3);
    assert_eq!(r["results"]["certified_lower"], 3);
}

#[test]
fn verify_bound_example3() {
    let out = koszul(&["verify-bound", "builtin:example3", "--text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("reason: 3 ≤ 4"), "{text}");
    assert!(text.contains("verdict: holds"));
}

#[test]
fn cap_limited_toomer_is_inconclusive() {
    let path = scratch("poly.json", r#"{"generators": [{"name": "z", "degree": 2}]}"#);
    let out = koszul(&["toomer", &path, "--max-degree", "20", "--max-wordlength", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["results"]["candidate"], "> 8");
}

#[test]
fn nonzero_d_squared_fails_validation() {
    // d(c) = ab gives d²(c) = b³
    let path = scratch(
        "bad.json",
        r#"{"generators": [{"name": "b", "degree": 2}, {"name": "a", "degree": 3}, {"name": "c", "degree": 4}],
            "differential": {"a": "b^2", "c": "a*b"}}"#,
    );
    let out = koszul(&["validate", &path]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["results"]["d_squared"]["pass"], false);
}

#[test]
fn parse_errors_report_positions() {
    let path = scratch("typo.json", "{\n  \"generators\": [{\"name\": \"z\", \"degree\": 2}],\n  \"differential\": {\"z\": \"z^^2\"}\n}\n");
    let out = koszul(&["validate", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column") && err.contains("d(z)"), "{err}");
    let path = scratch("broken.json", "{\n  \"generators\": [,]\n}");
    let err = String::from_utf8(koszul(&["validate", &path]).stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn env_caps_are_overridden_by_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(["toomer", "builtin:example2", "--max-degree", "6"])
        .env("KOSZUL_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(json(&out)["caps"]["N"], 6);
    let out = Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(["toomer", "builtin:example2"])
        .env("KOSZUL_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(json(&out)["caps"]["N"], 4);
}

#[test]
fn corpus_run_is_byte_identical() {
    let a = koszul(&["corpus-run", "--seed", "17", "--count", "30"]);
    let b = koszul(&["corpus-run", "--seed", "17", "--count", "30"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("wall_time_ms").is_none());
    let t = koszul(&["corpus-run", "--seed", "17", "--count", "2", "--timing"]);
    assert!(json(&t).get("wall_time_ms").is_some());
}

#[test]
fn remaining_subcommands() {
    let out = koszul(&["cylinder-demo", "--seed", "3", "--count", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["cylinders_passed"], 5);
    let out = koszul(&["fiber", "builtin:example3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["n_used"], 1);
    let out = koszul(&["cohomology", "builtin:example2", "--max-degree", "10"]);
    assert_eq!(json(&out)["results"]["dims"], serde_json::json!([1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]));
    let out = koszul(&["fiber", "builtin:odd-sphere"]);
    assert_eq!(out.status.code(), Some(2));
}
