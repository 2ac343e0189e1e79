//! End-to-end tests of the command-line surface: exit codes, report
//! files, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn manova_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_manova-lab"))
        .args(args)
        .env_remove("MANOVA_LAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_suite_passes_with_exit_zero() {
    let out = manova_lab(&["verify", "manova"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("[PASS]"));
    assert!(text.contains("all checks passed"));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = manova_lab(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn esd_rejects_out_of_range_alpha() {
    let out = manova_lab(&["esd", "--alpha", "1.5", "--beta", "0.5", "--n", "16"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha must lie in (0,1)"));
}

#[test]
fn esd_json_report_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path_a = dir.path().join("a.json");
    let path_b = dir.path().join("b.json");
    for path in [&path_a, &path_b] {
        let out = manova_lab(&[
            "esd", "--alpha", "0.3", "--beta", "0.5", "--n", "32", "--trials", "1", "--kmax",
            "4", "--bins", "10", "--seed", "99", "--format", "json", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b, "same config and seed must give byte-identical output");

    // parse(serialize(report)) == report, via the JSON value tree
    let value: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let re_serialized = serde_json::to_vec(&value).unwrap();
    let re_parsed: serde_json::Value = serde_json::from_slice(&re_serialized).unwrap();
    assert_eq!(value, re_parsed);
    // config echo and version are embedded
    assert_eq!(value["config"]["seed"], 99);
    assert_eq!(value["config"]["alpha_rational"], "3/10");
    assert!(value["library_version"].is_string());
}

#[test]
fn esd_csv_has_the_fixed_header() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("hist.csv");
    let out = manova_lab(&[
        "esd", "--alpha", "0.25", "--beta", "0.5", "--n", "32", "--trials", "2", "--kmax",
        "3", "--bins", "8", "--seed", "5", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("bin_center,count,empirical_density,manova_density")
    );
    assert_eq!(lines.count(), 8);
}

#[test]
fn esd_moment_table_on_stdout() {
    let out = manova_lab(&[
        "esd", "--alpha", "0.3", "--beta", "0.5", "--n", "32", "--trials", "2", "--kmax", "3",
        "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("exact"));
    assert!(text.contains("max |moment diff|"));
    // decimal-to-rational conversion is echoed
    assert!(text.contains("(= 3/10)"));
}

#[test]
fn edge_warns_outside_the_half_case() {
    let out = manova_lab(&[
        "edge", "--alpha", "0.3", "--beta", "0.4", "--n-list", "16,32", "--trials", "2",
        "--seed", "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    assert!(stdout_of(&out).to_lowercase().contains("conjectur"));
}

#[test]
fn edge_writes_summary_json() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("edge.json");
    let out = manova_lab(&[
        "edge", "--alpha", "0.3", "--beta", "0.5", "--n-list", "16,32", "--trials", "3",
        "--seed", "4", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let value: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(value["summary"]["config"]["trials"], 3);
    assert_eq!(value["summary"]["runs"].as_array().unwrap().len(), 2);
    assert_eq!(value["beta_rational"], "1/2");
}

#[test]
fn thread_cap_env_var() {
    let ok = Command::new(env!("CARGO_BIN_EXE_manova-lab"))
        .args([
            "esd", "--alpha", "0.3", "--beta", "0.5", "--n", "16", "--trials", "2", "--kmax",
            "2", "--seed", "1",
        ])
        .env("MANOVA_LAB_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_manova-lab"))
        .args(["verify", "manova"])
        .env("MANOVA_LAB_THREADS", "zero")
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = manova_lab(&[]);
    assert_eq!(out.status.code(), Some(2));
    let _ = Path::new("unused");
}
