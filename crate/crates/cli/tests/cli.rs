use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pncrit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn pncrit")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("pncrit-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn construct_power_and_analyze_pcf() {
    let map = tmpfile("power.json");
    let out = run(&[
        "construct",
        "power",
        "--n",
        "2",
        "--d",
        "2",
        "--out",
        map.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&map).unwrap()).unwrap();
    assert_eq!(v["coords"][0], "x0^2");

    let out = run(&["analyze", "pcf", map.to_str().unwrap(), "--K", "4", "--L", "2"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["type"], serde_json::json!([1, 0]));
}

#[test]
fn analyze_fixed_power() {
    let map = tmpfile("power-fixed.json");
    run(&["construct", "power", "--n", "2", "--d", "2", "--out", map.to_str().unwrap()]);
    let out = run(&["analyze", "fixed", map.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["projective_dimension"], 0);
    assert_eq!(v["count"], 7);
}

#[test]
fn hyperplane_witness_verifies() {
    let w = tmpfile("witness.json");
    let out = run(&[
        "construct",
        "hyperplane",
        "--n",
        "2",
        "--d",
        "2",
        "--e",
        "2",
        "--seed",
        "7",
        "--out",
        w.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["verify", w.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);

    // corrupt the witness: swap p for a simple point
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    doc["p"] = doc["simple_points"][0].clone();
    let bad = tmpfile("witness-bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let fiber = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "fiber")
        .unwrap();
    assert_eq!(fiber["pass"], false);
}

#[test]
fn sympow_from_p1_string() {
    let out = run(&["construct", "sympow", "--n", "2", "--p1", "z^2-1"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["d"], 2);
    assert_eq!(v["n"], 2);
}

#[test]
fn family_small_bounds_absent() {
    let map = tmpfile("family.json");
    run(&[
        "construct", "family", "--n", "2", "--d", "2", "--t", "1", "--out",
        map.to_str().unwrap(),
    ]);
    let out = run(&["analyze", "pcf", map.to_str().unwrap(), "--K", "2", "--L", "1"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["type"], Value::Null);
}

#[test]
fn validation_errors_exit_2() {
    let out = run(&["construct", "power", "--n", "0", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["analyze", "pcf", "/nonexistent/map.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["analyze", "nonsense", "/nonexistent/map.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output_modulo_timings() {
    let map = tmpfile("power-det.json");
    run(&["construct", "power", "--n", "2", "--d", "2", "--out", map.to_str().unwrap()]);
    let strip = |out: &Output| {
        let mut v = json_of(out);
        v.as_object_mut().unwrap().remove("timings_ms");
        v
    };
    let a = run(&["analyze", "orbit", map.to_str().unwrap(), "--seed", "9"]);
    let b = run(&["analyze", "orbit", map.to_str().unwrap(), "--seed", "9"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn text_format_renders() {
    let out = bin()
        .args(["construct", "power", "--n", "2", "--d", "2", "--format", "text"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("x0^2"));
    assert!(!text.contains('{'));
}

#[test]
fn env_caps_override() {
    let out = bin()
        .args(["construct", "power", "--n", "2", "--d", "2"])
        .env("PN_CRIT_CAPS", "max_degree=1")
        .output()
        .unwrap();
    // a degree cap of 1 rejects building the degree-2 coordinates
    assert_eq!(out.status.code(), Some(3));
    let out = bin()
        .args(["construct", "power", "--n", "2", "--d", "2"])
        .env("PN_CRIT_CAPS", "bogus=1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
