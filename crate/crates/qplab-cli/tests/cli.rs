//! End-to-end checks of the binary: exit codes, determinism, cache
//! behavior and the report schema.

use std::process::Command;

fn qplab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qplab"))
}

#[test]
fn usage_error_is_exit_2() {
    let out = qplab().args(["classify-h", "--m", "99"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = qplab()
        .args(["verify-curve", "--case", "1", "--m", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = qplab()
        .args(["verify-curve", "--case", "2a", "--m", "6", "--l", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "--m and --l together is ambiguous");
}

#[test]
fn passing_report_is_exit_0_with_schema() {
    let out = qplab()
        .args(["classify-h", "--m", "8", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["spec"]["command"], "classify-h");
    assert!(v["checks"].as_array().unwrap().len() >= 1);
    assert_eq!(v["summary"], "Pass");
    assert!(v["version"].as_str().unwrap().contains('.'));
    for c in v["checks"].as_array().unwrap() {
        assert!(c["anchor"].as_str().unwrap().len() > 0);
    }
}

#[test]
fn failing_verification_is_exit_1_with_report() {
    // the q = 3 extension test contradicts the claimed maximality
    let out = qplab()
        .args(["maximality", "--case", "1", "--q", "3", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"], "Fail");
}

#[test]
fn cache_round_trip_and_corruption_recovery() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        qplab()
            .args(args)
            .env("QPLAB_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run(&["census", "--case", "2a", "--m", "6"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["census", "--case", "2a", "--m", "6"]);
    assert_eq!(first.stdout, second.stdout, "cached replay must be byte-identical");
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    // corrupt the entry; the tool must recompute and overwrite
    let entry = std::fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    std::fs::write(&entry, "{broken").unwrap();
    let third = run(&["census", "--case", "2a", "--m", "6"]);
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt cache entry"));
    let healed = std::fs::read_to_string(&entry).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&healed).is_ok());
}

#[test]
fn markdown_format() {
    let out = qplab()
        .args(["chartable", "--m", "6", "--format", "md", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("| check | anchor | verdict | witness |"));
    assert!(text.contains("summary: **pass**"));
}
