//! End-to-end checks of the `potconst` binary: spec-file parsing, output
//! formats, determinism and exit codes.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_potconst"))
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn constant_on_disk_from_json_spec() {
    let dir = tempfile::tempdir().unwrap();
    let set = write(
        dir.path(),
        "disk.json",
        r#"{"kind":"disk","center":[0,0],"radius":1,"boundary_samples":512}"#,
    );
    let out = bin()
        .args(["constant", "--set"])
        .arg(&set)
        .args(["--n", "512"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((parsed["value"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
    assert!((parsed["exp_value"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn constant_m_csv_output_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let set = write(
        dir.path(),
        "disk.json",
        r#"{"kind":"disk","center":[0,0],"radius":1,"boundary_samples":256}"#,
    );
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    for out in [&out_a, &out_b] {
        let run = bin()
            .args(["constant-m", "--set"])
            .arg(&set)
            .args([
                "--m",
                "2",
                "--n",
                "128",
                "--restarts",
                "3",
                "--seed",
                "7",
                "--format",
                "csv",
            ])
            .arg("--output")
            .arg(out)
            .output()
            .unwrap();
        assert!(run.status.success());
    }
    let a = std::fs::read(&out_a).unwrap();
    let b = std::fs::read(&out_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(
        a, b,
        "identical config + seed must give byte-identical files"
    );
}

#[test]
fn weighted_constant_with_weight_file() {
    let dir = tempfile::tempdir().unwrap();
    let set = write(
        dir.path(),
        "seg.json",
        r#"{"kind":"segment","a":[0,0],"b":[1,0]}"#,
    );
    let weight = write(dir.path(), "w.json", r#"{"kind":"lorentz"}"#);
    let out = bin()
        .args(["weighted-constant", "--set"])
        .arg(&set)
        .arg("--weight")
        .arg(&weight)
        .args(["--n", "64"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((parsed["value"].as_f64().unwrap() - 1.037550517).abs() < 1e-6);
}

#[test]
fn demo_countable_matches_spec_example() {
    let out = bin()
        .args(["demo-countable", "--A", "1,2,3,4", "--n", "64"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // ratio >= A_4 = 4 per the construction.
    assert!(parsed["ratio"].as_f64().unwrap() >= 4.0);
    assert_eq!(parsed["exact_bound_holds"], serde_json::Value::Bool(true));
}

#[test]
fn riesz_check_csv() {
    let dir = tempfile::tempdir().unwrap();
    let set = write(
        dir.path(),
        "pts.json",
        r#"{"kind":"points","points":[[0,0]]}"#,
    );
    let out = bin()
        .args(["riesz-check", "--set"])
        .arg(&set)
        .args(["--radii", "2,10", "--format", "csv", "--n", "64"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "radius,mass_estimate");
    for line in lines {
        let mass: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!((mass - 1.0).abs() < 1e-6);
    }
}

#[test]
fn verify_manifest_batch() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = write(
        dir.path(),
        "manifest.json",
        r#"{"experiments":[{"set":{"kind":"disk","center":[0,0],"radius":1,"boundary_samples":256},"m":2,"n":10,"seed":5,"count":3}]}"#,
    );
    let out = bin()
        .args(["verify", "--manifest"])
        .arg(&manifest)
        .args(["--n", "64", "--format", "csv"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("set_id,weight,m,n_total,lhs,rhs_m,rhs,ratio_root"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn validation_failures_exit_2_without_panicking() {
    // Missing --set.
    let out = bin().args(["constant"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    // Malformed spec file.
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"kind":"disk","radius":-2}"#);
    let out = bin()
        .args(["constant", "--set"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Degenerate geometry is rejected by validation, not by a panic.
    let degenerate = write(
        dir.path(),
        "degenerate.json",
        r#"{"kind":"segment","a":[1,1],"b":[1,1]}"#,
    );
    let out = bin()
        .args(["capacity", "--set"])
        .arg(&degenerate)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fekete_export_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let set = write(
        dir.path(),
        "square.json",
        r#"{"kind":"polygon","vertices":[[0,0],[1,0],[1,1],[0,1]],"boundary_samples":128}"#,
    );
    let out = bin()
        .args(["fekete", "--set"])
        .arg(&set)
        .args(["--n", "12"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["points"].as_array().unwrap().len(), 12);
    assert!(parsed["log_vandermonde"].as_f64().is_some());
}
