//! End-to-end checks of the command-line interface: emitted JSON is
//! accepted back by the corresponding input flags, and exit codes reflect
//! verification outcomes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tatehh"))
}

fn write(dir: &std::path::Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn group_export_roundtrips_through_group_file() {
    let dir = std::env::temp_dir().join("tatehh-cli-group");
    std::fs::create_dir_all(&dir).unwrap();
    let out = bin()
        .args(["export", "group", "--group", "S3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let path = write(&dir, "s3.json", &String::from_utf8(out.stdout).unwrap());
    let info = bin()
        .args(["group", "info", "--group-file", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(info.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&info.stdout).unwrap();
    assert_eq!(parsed["order"], serde_json::json!(6));
    let pretty = bin()
        .args(["group", "info", "--pretty", "--group-file", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(String::from_utf8(pretty.stdout).unwrap().contains("order 6"));
}

#[test]
fn compute_outputs_feed_back_as_inputs() {
    let dir = std::env::temp_dir().join("tatehh-cli-compute");
    std::fs::create_dir_all(&dir).unwrap();
    // a degree -1 chain: the basis element at the transposition 1
    let a = write(
        &dir,
        "a.json",
        r#"{"degree": -1, "field": {"characteristic": 0}, "terms": [{"key": [1], "coeff": "1"}]}"#,
    );
    // diff: degree -1 -> 0; its output must be accepted back by diff
    let out = bin()
        .args(["compute", "diff", "--group", "S3", "--input", a.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let tau = write(&dir, "tau.json", &String::from_utf8(out.stdout).unwrap());
    let out2 = bin()
        .args(["compute", "diff", "--group", "S3", "--input", tau.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out2.status.success());
    // τ lands in the center, so the next differential is zero
    let parsed: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    assert_eq!(parsed["terms"].as_array().unwrap().len(), 0);

    // rho emits a decomposed element that iota accepts
    let out = bin()
        .args(["compute", "rho", "--group", "S3", "--input", a.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let dec = write(&dir, "dec.json", &String::from_utf8(out.stdout).unwrap());
    let out = bin()
        .args(["compute", "iota", "--group", "S3", "--input", dec.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // cup accepts two copies of the same file
    let out = bin()
        .args([
            "compute", "cup", "--group", "S3",
            "--input", a.to_str().unwrap(),
            "--input", a.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["degree"], serde_json::json!(-2));

    // mhat accepts decomposed elements
    let out = bin()
        .args([
            "compute", "mhat", "--group", "S3",
            "--input", dec.to_str().unwrap(),
            "--input", dec.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_exit_codes() {
    let ok = bin()
        .args(["verify", "complex", "--group", "Z4", "--window", "2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    // abelian suite on a nonabelian group reports failure -> exit 3
    let fail = bin()
        .args(["verify", "abelian", "--group", "S3", "--window", "1"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(3));
    // usage error -> nonzero, distinct from verification failure
    let usage = bin().args(["verify", "complex"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    let unknown = bin()
        .args(["verify", "nonsense", "--group", "Z2"])
        .output()
        .unwrap();
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn trees_and_abelian_table() {
    let out = bin().args(["trees", "list", "4"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 10);

    let out = bin()
        .args([
            "abelian", "table", "--group", "Z4", "--op", "m2", "--degrees=-2,-2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 9);

    let out = bin()
        .args(["abelian", "table", "--group", "S3", "--op", "m2", "--degrees", "0,0"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}
