use std::process::{Command, Output};

use serde_json::Value;

fn heavy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heavy")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim().to_string()
}

fn gen(family: &str, params: &str) -> String {
    let out = heavy(&["gen", "--family", family, "--params", params]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn check_reports_a_witness_copy() {
    let claw = gen("claw", "");
    let out = heavy(&["check", "--graph", &claw, "--pattern", "claw", "--condition", "o"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["satisfied"], false);
    assert_eq!(v["witness"]["vertices"].as_array().unwrap().len(), 4);

    let k5 = gen("K5", "");
    let v = json(&heavy(&["check", "--graph", &k5, "--pattern", "P4", "--condition", "free"]));
    assert_eq!(v["satisfied"], true);
    assert!(v["witness"].is_null());
}

#[test]
fn closure_of_a_claw_free_graph() {
    let c6 = gen("C6", "");
    let out = heavy(&["closure", "--graph", &c6, "--kind", "r", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["closure_graph6"], c6.as_str());
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);
    assert_eq!(v["shape_report"]["claw_free"], true);

    let p4 = gen("P4", "");
    let v = json(&heavy(&["closure", "--graph", &p4, "--kind", "c", "--policy", "random:3"]));
    assert_eq!(v["shape_report"]["no_heavy_pair"], true);
}

#[test]
fn oracles() {
    let petersen = gen("petersen", "");
    let v = json(&heavy(&["oracle", "--graph", &petersen, "--circumference"]));
    assert_eq!(v["value"], 9);
    assert_eq!(v["certificate"]["vertices"].as_array().unwrap().len(), 9);
    let v = json(&heavy(&["oracle", "--graph", &petersen, "--hamiltonian"]));
    assert_eq!(v["value"], false);
    let v = json(&heavy(&["oracle", "--graph", &gen("l1", ""), "--hamiltonian"]));
    assert_eq!(v["value"], false);
}

#[test]
fn gen_catalog_and_claims() {
    let out = heavy(&["gen", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("pfam")));
    assert_eq!(gen("pfam", "x1=T,x2=T,x3=T"), gen("l1", ""));
    // the first construction's closure claim does not hold
    let out = heavy(&["gen", "--family", "g1", "--params", "r=5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = heavy(&["gen", "--family", "g1", "--params", "r=5", "--unchecked"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["oracle", "--graph", "A_"][..],
        &["oracle", "--graph", "!!", "--hamiltonian"],
        &["check", "--graph", "A_", "--pattern", "Q7", "--condition", "c"],
        &["check", "--graph", "A_", "--pattern", "P4", "--condition", "p"],
        &["closure", "--graph", "C~", "--kind", "r", "--policy", "sideways"],
        &["gen", "--family", "g1", "--params", "r=2"],
        &["verify", "--suite", "nope"],
        &["verify", "--suite", "oracles", "--n-max", "8"],
        &["hunt", "--predicate", "bogus"],
        &["frobnicate"],
    ] {
        let out = heavy(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn closure_rejects_inputs_outside_its_class() {
    let claw = gen("claw", "");
    let out = heavy(&["closure", "--graph", &claw, "--kind", "r"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_a_report() {
    let dir = std::env::temp_dir().join(format!("heavy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("oracles.json");
    let out = heavy(&["verify", "--suite", "oracles", "--n-max", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "oracles");
    assert_eq!(v["status"], "passed");

    let out = heavy(&["verify", "--suite", "witnesses"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "failed");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hunt_finds_and_misses() {
    let out = heavy(&["hunt", "--predicate", "C3-c-heavy-implies-hamiltonian", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json(&out)["witnesses"].as_array().unwrap().is_empty());
    let out = heavy(&["hunt", "--predicate", "closure-no-heavy-pair", "--budget", "200", "--seed", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["witnesses"].as_array().unwrap().is_empty());
}
