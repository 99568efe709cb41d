//! End-to-end runs of the `geoslice` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn geoslice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geoslice")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn workspace_file(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn weighted_distance() {
    let out = geoslice(&["dist", "--graph", "h", "--p", "3", "--a", "1", "--b", "2", "--from", "0,0", "--to", "3,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn grid_slice_listing() {
    let out = geoslice(&["slice", "--graph", "grid", "--from", "0,0", "--to", "3,3", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn slice_report_json() {
    let out = geoslice(&["slice", "--graph", "h", "--from", "0,0", "--to", "9,3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sizes"][0], 1);
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["pass"] == true));
}

#[test]
fn appendix_export_and_build() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("appendix.svg");
    let edges = dir.path().join("appendix.edges");
    let out = geoslice(&["export", "--graph", "appendix", "--window", "0,36,0,36", "--format", "svg", "-o", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<line").count(), 2966);
    let again = geoslice(&["export", "--graph", "appendix", "--window", "0,36,0,36"]);
    assert_eq!(again.stdout, text.as_bytes());

    let out = geoslice(&["build", "--graph", "appendix", "--window", "0,36,0,36", "-o", edges.to_str().unwrap()]);
    assert!(out.status.success());
    let golden = std::fs::read_to_string(workspace_file("crates/core/tests/data/appendix_0_36.edges")).unwrap();
    assert_eq!(std::fs::read_to_string(&edges).unwrap(), golden);
}

#[test]
fn figures_export() {
    for fig in ["blocks", "aligned", "hex", "triangular", "appendix"] {
        let out = geoslice(&["export", "--figure", fig]);
        assert!(out.status.success(), "{fig}");
        assert!(stdout(&out).ends_with("</svg>\n"));
    }
}

#[test]
fn verify_json_matches_schema_and_is_reproducible() {
    let schema_text = std::fs::read_to_string(workspace_file("docs/verify-report.schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let golden = workspace_file("crates/core/tests/data/appendix_0_36.edges");
    let args = ["verify", "--checks", "baselines,tilings,blocks", "--golden", golden.to_str().unwrap(), "--seed", "7"];
    let a = geoslice(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    assert_eq!(report["checks"].as_array().unwrap().len(), 3);
    assert_eq!(geoslice(&args).stdout, a.stdout);
}

#[test]
fn failing_checks_exit_one_with_a_valid_report() {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(workspace_file("docs/verify-report.schema.json")).unwrap()).unwrap();
    let out = geoslice(&["verify", "--checks", "distinguished", "--rule", "coprime-midpoint"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(jsonschema::is_valid(&schema, &report));
    assert_eq!(report["pass"], false);
    assert!(!report["checks"][0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn usage_and_resource_errors() {
    assert_eq!(geoslice(&["dist", "--from", "0,0"]).status.code(), Some(2));
    assert_eq!(geoslice(&["dist", "--from", "0;0", "--to", "1,1"]).status.code(), Some(2));
    assert_eq!(geoslice(&["teleport"]).status.code(), Some(2));
    let out = geoslice(&["dist", "--graph", "grid", "--from", "0,0", "--to", "9000,9000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cells"));
    let out = geoslice(&["build", "--graph", "grid", "--window", "0,9999,0,9999", "--cell-cap", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn thread_pool_variable() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_geoslice"))
            .env("GEOSLICE_THREADS", threads)
            .args(["verify", "--checks", "classifier"])
            .output()
            .unwrap()
    };
    let one = run("1");
    assert!(one.status.success());
    assert_eq!(run("2").stdout, one.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn config_dump_round_trips() {
    let args = ["count", "--graph", "reduction", "--N", "44", "--from", "-3,4", "--to", "5,6", "--dump-config"];
    let out = geoslice(&args);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "count");
    assert_eq!(v["graph"]["kind"], "reduction");
    assert_eq!(v["graph"]["n"], 44);
    assert_eq!(v["from"], serde_json::json!({ "x": -3, "y": 4 }));
    assert_eq!(v["cap"], u64::MAX);
    let redump: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(redump, v);
}
