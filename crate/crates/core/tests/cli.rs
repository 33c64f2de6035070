use std::path::PathBuf;
use std::process::Command;

use permod::cli::{run, Report};

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel).to_string_lossy().into_owned()
}

fn structured(args: &[&str]) -> (Report, String, i32) {
    let mut full = vec!["permod"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "structured"]);
    let out = run(full);
    let report: Report = serde_json::from_str(&out.output).expect(&out.output);
    (report, out.output, out.status)
}

#[test]
fn verify_category_builtins_pass() {
    for model in ["fibonacci", "ising", "vec_z3"] {
        let (r, _, status) = structured(&["verify-category", "--model", model]);
        assert!(r.pass && status == 0, "{model}");
        assert!(r.instances["pentagon"] > 0);
    }
}

#[test]
fn verify_category_rejects_perturbed_file() {
    let text = std::fs::read_to_string(data("models/fibonacci.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entries = doc["F"].as_array_mut().unwrap();
    let last = entries.last_mut().unwrap();
    let re = last["re"].as_f64().unwrap();
    last["re"] = serde_json::json!(re + 1e-3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perturbed.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let (r, _, status) = structured(&["verify-category", "--model", path.to_str().unwrap()]);
    assert!(!r.pass);
    assert_eq!(status, 1);
    assert!(r.residuals["pentagon"] >= 1e-4);
}

#[test]
fn covers_s3_example() {
    let (r, _, status) = structured(&["covers", "--group", &data("groups/s3.json"), "--g1", "r", "--g2", "s"]);
    assert_eq!(status, 0);
    let comps = r.details["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["genus"], 0);
    assert_eq!(comps[0]["sheets"], 3);
}

#[test]
fn covers_identity_pair_is_trivial() {
    let (r, _, _) = structured(&["covers", "--group", "symmetric:4", "--g1", "1", "--g2", "1"]);
    assert_eq!(r.details["components"].as_array().unwrap().len(), 4);
}

#[test]
fn action_words() {
    let (r, _, _) = structured(&["action", "--group", &data("groups/z4_shift.json"), "--g", "r"]);
    assert_eq!(r.details["words"], serde_json::json!(["A_0 A_3 A_2 A_1 M"]));
    let (r, _, _) = structured(&["action", "--group", &data("groups/two_orbits.json"), "--g", "g"]);
    assert_eq!(r.details["words"].as_array().unwrap().len(), 2);
    let (r, _, _) = structured(&["action", "--group", "cyclic:3", "--g", "1"]);
    assert_eq!(r.details["words"], serde_json::json!(["A_0 M", "A_1 M", "A_2 M"]));
}

#[test]
fn checks_on_swap_pass() {
    let group = data("groups/z2_swap.json");
    for cmd in ["pentagon", "gamma", "zmatrix"] {
        let mut args = vec![cmd, "--model", "fibonacci", "--group", group.as_str(), "--g", "s"];
        if cmd != "zmatrix" {
            args.push("--exhaustive");
        }
        let (r, _, status) = structured(&args);
        assert!(r.pass && status == 0, "{cmd}: {r:?}");
        assert!(r.residuals.values().all(|&v| v < 1e-9));
    }
}

#[test]
fn identity_g_is_trivial_pass() {
    let (r, _, _) = structured(&["zmatrix", "--model", "ising", "--group", "cyclic:2", "--g", "1"]);
    assert!(r.pass);
    assert_eq!(r.residuals["s_commutator"], 0.0);
    let (r, _, _) = structured(&["pentagon", "--model", "ising", "--group", "cyclic:2", "--exhaustive"]);
    assert_eq!(r.residuals["mixed_pentagon"], 0.0);
}

#[test]
fn ising_three_cycle() {
    let (r, _, _) = structured(&["zmatrix", "--model", "ising", "--group", "cyclic:3", "--g", "r"]);
    assert!(r.pass);
    let (r, _, _) = structured(&["gamma", "--model", "ising", "--group", "cyclic:3", "--g", "r", "--samples", "30"]);
    assert!(r.pass);
}

#[test]
fn structured_output_round_trips() {
    let (r, text, _) = structured(&["gamma", "--model", "ising", "--group", "cyclic:3", "--g", "r", "--samples", "25", "--seed", "11"]);
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, text);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(raw["residuals"]["naturality"].as_f64().unwrap(), r.residuals["naturality"]);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["pentagon", "--model", "ising", "--group", "cyclic:3", "--g", "r", "--samples", "40", "--seed", "5"];
    let (_, a, _) = structured(&args);
    let (_, b, _) = structured(&args);
    assert_eq!(a, b);
}

#[test]
fn errors_exit_with_two() {
    let out = run(["permod", "pentagon", "--model", "nope", "--group", "cyclic:2"]);
    assert_eq!(out.status, 2);
    assert!(out.output.starts_with("error:"));
    assert_eq!(run(["permod", "verify-category", "--model", "ising", "--tol", "0"]).status, 2);
    assert_eq!(run(["permod", "action", "--group", "cyclic:3", "--g", "q"]).status, 2);
    assert_eq!(run(["permod", "induction", "--model", "fibonacci", "--n", "2"]).status, 2);
}

#[test]
fn export_model_round_trips() {
    let out = run(["permod", "export-model", "--model", "ising"]);
    assert_eq!(out.status, 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ising.json");
    std::fs::write(&path, &out.output).unwrap();
    let (r, _, status) = structured(&["verify-category", "--model", path.to_str().unwrap()]);
    assert!(r.pass && status == 0);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_permod");
    let ok = Command::new(bin).args(["associator", "--n", "4"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("associator: PASS"));
    let bad = Command::new(bin).args(["covers", "--group", "cyclic:3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
