use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contextuality-lab"))
        .args(args)
        .env_remove("CONTEXTUALITY_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn verify_pm_passes() {
    let out = run(&["verify", "pm"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["suite"], "pm");
    assert_eq!(report["summary"]["failed"], 0);
    let checks = report["checks"].as_array().unwrap();
    let enumeration = checks.iter().find(|c| c["id"] == "pm.enumeration").unwrap();
    assert!(enumeration["witness"].as_str().unwrap().starts_with("0/512"));
}

#[test]
fn verify_bell_ghz_reports_the_column() {
    let out = run(&["verify", "bell_ghz"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let checks = report["checks"].as_array().unwrap();
    let column = checks.iter().find(|c| c["id"] == "bell-ghz.column.phi").unwrap();
    assert!(column["witness"].as_str().unwrap().starts_with("(e1, e1, e1, −e1)"));
}

#[test]
fn unknown_target_is_a_usage_error() {
    let out = run(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn reports_are_byte_stable_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["verify", "states", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&run(&["verify", "states"])));
}

#[test]
fn seed_env_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_contextuality-lab"))
        .args(["verify", "algebra", "--seed", "5"])
        .env("CONTEXTUALITY_LAB_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["environment"]["seed"], 11);

    let flag_only = json(&run(&["verify", "algebra", "--seed", "5", "--mode", "approx"]));
    assert_eq!(flag_only["environment"]["seed"], 5);
    assert_eq!(flag_only["environment"]["mode"], "approx");

    let bad = Command::new(env!("CARGO_BIN_EXE_contextuality-lab"))
        .args(["verify", "algebra"])
        .env("CONTEXTUALITY_LAB_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn chsh_summary_and_csv() {
    let out = run(&["chsh", "0", "3.14159265", "100000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "max=2.500000 at phi=1.047198");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.csv");
    let out = run(&["chsh", "0", "0.1", "3", "--csv", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "phi,F,qm_lhs,classical_bound,qm_bound");
    assert_eq!(lines[1], "0.000000000000,2.000000000000,2.000000000000,2,2.5");
}

#[test]
fn chsh_rejects_bad_ranges() {
    assert_eq!(run(&["chsh", "1", "0", "10"]).status.code(), Some(2));
    assert_eq!(run(&["chsh", "-0.5", "1", "10"]).status.code(), Some(2));
    assert_eq!(run(&["chsh", "0", "1", "2"]).status.code(), Some(2));
    assert_eq!(run(&["chsh", "0", "4", "10"]).status.code(), Some(2));
}

#[test]
fn search_identities() {
    let out = run(&["search-identities", "e1"]);
    assert_eq!(out.status.code(), Some(0));
    let maps = json(&out);
    let maps = maps.as_array().unwrap();
    assert_eq!(maps.len(), 4);
    assert!(maps.iter().any(|m| m["f1"] == "-e1" && m["f2"] == "e2" && m["g1"] == "e1" && m["g2"] == "e2"));

    let out = run(&["search-identities", "-e2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!json(&out).as_array().unwrap().is_empty());

    assert_eq!(run(&["search-identities", "e3"]).status.code(), Some(2));
    assert_eq!(run(&["search-identities", "h1"]).status.code(), Some(2));
}

#[test]
fn constraints_round_trip_through_enumerate() {
    let out = run(&["constraints", "ghz"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ghz.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let search = json(&run(&["enumerate", path.to_str().unwrap()]));
    assert_eq!(search["candidates"], 1024);
    assert_eq!(search["satisfying_count"], 0);

    assert_eq!(run(&["constraints", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "/nonexistent/file.json"]).status.code(), Some(1));
}
