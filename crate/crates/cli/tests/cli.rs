//! End-to-end tests of the `genci` binary: exit codes, JSON shape, and
//! determinism of the emitted reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn genci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("genci-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_input(dir: &std::path::Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn classify_reports_the_verdict_and_exits_zero() {
    let dir = temp_dir("classify");
    let input = write_input(&dir, "e1.txt", "n=4\nfacets: {1,2} {3,4}\n");
    let out = genci(&["classify", "--input", &input]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["is_gci"], true);
    assert_eq!(report["is_ci"], false);
    assert_eq!(report["cm_per_field"]["q"], false);
    assert_eq!(report["buchsbaum_per_field"]["q"], true);
    assert_eq!(report["gci_links"], report["gci_theorem"]);
}

#[test]
fn negative_verdicts_still_exit_zero() {
    let dir = temp_dir("negative");
    // the six-cycle fails condition 3; mathematically false but a clean run
    let input = write_input(
        &dir,
        "c6.txt",
        "n=6\ngenerators: x1*x2 x2*x3 x3*x4 x4*x5 x5*x6 x6*x1\n",
    );
    let out = genci(&["classify", "--input", &input]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["is_gci"], false);
}

#[test]
fn parse_errors_exit_one() {
    let dir = temp_dir("errors");
    let garbage = write_input(&dir, "bad.txt", "n=3\nfacetz: {1,2,3}\n");
    let out = genci(&["classify", "--input", &garbage]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let singleton = write_input(&dir, "singleton.txt", "n=3\ngenerators: x1\n");
    let out = genci(&["classify", "--input", &singleton]);
    assert_eq!(out.status.code(), Some(1));

    let out = genci(&["classify", "--input", "/nonexistent/input.txt"]);
    assert_eq!(out.status.code(), Some(1));

    let dir_str = dir.to_string_lossy();
    let input = write_input(&dir, "ok.txt", "n=2\nfacets: {1,2}\n");
    let _ = dir_str;
    let out = genci(&["classify", "--input", &input, "--field", "f4"]);
    assert_eq!(out.status.code(), Some(1), "4 is not prime");
}

#[test]
fn enumerate_is_clean_and_deterministic() {
    let out = genci(&["enumerate", "--n", "3", "--checks", "all"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["clean"], true);
    assert_eq!(report["mode"], "exhaustive");
    assert_eq!(report["summary"]["mismatches"].as_array().unwrap().len(), 0);

    let run = || {
        let out = genci(&[
            "enumerate", "--n", "7", "--sample", "200", "--seed", "1", "--checks", "routes,reconstruct",
        ]);
        assert!(out.status.success());
        let mut v = stdout_json(&out);
        v["generated_at"] = serde_json::json!(0);
        v["elapsed_ms"] = serde_json::json!(0);
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn enumerate_rejects_oversized_n() {
    let out = genci(&["enumerate", "--n", "7", "--checks", "routes"]);
    assert_eq!(out.status.code(), Some(1));
    let out = genci(&["enumerate", "--n", "13", "--sample", "10", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn homology_splits_rp2_by_field() {
    let dir = temp_dir("homology");
    let out = genci(&["fixtures", "--emit", &dir.to_string_lossy()]);
    assert!(out.status.success());
    let rp2 = dir.join("rp2.txt");
    assert!(rp2.exists());
    let out = genci(&[
        "homology", "--input", &rp2.to_string_lossy(), "--field", "q", "--field", "f2",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    // values are b~_{-1}, b~_0, b~_1, b~_2
    assert_eq!(report["betti_per_field"]["q"]["betti"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(report["betti_per_field"]["f2"]["betti"], serde_json::json!([0, 0, 1, 1]));

    // emitted fixtures replay through classify
    let out = genci(&["classify", "--input", &dir.join("e5.txt").to_string_lossy()]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["is_gci"], true);
}

#[test]
fn fixtures_lists_the_catalog() {
    let out = genci(&["fixtures"]);
    assert!(out.status.success());
    let listing = stdout_json(&out);
    let entries = listing.as_array().unwrap();
    assert_eq!(entries.len(), 10);
    assert_eq!(entries[0]["name"], "E1");
    assert_eq!(entries[9]["name"], "RP2");
}
