use std::path::PathBuf;
use std::process::{Command, Output};

fn crtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crtool")).args(args).env_remove("CRTOOL_CACHE_DIR").output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("crtool-it-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_reports_separating_pairs() {
    let o = crtool(&["--format", "json", "analyze", "chain10"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["circuit"], true);
    assert_eq!(v["separating_pairs"], serde_json::json!([[2, 9], [3, 8], [4, 7]]));
}

#[test]
fn exit_codes() {
    assert_eq!(crtool(&["analyze", "nope"]).status.code(), Some(1));
    assert_eq!(crtool(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(crtool(&["--help"]).status.code(), Some(0));
    assert_eq!(crtool(&["--max-terms", "100", "poly", "double-banana"]).status.code(), Some(2));
    assert_eq!(crtool(&["poly", "w4", "--root", "9,9:1-2"]).status.code(), Some(1));
}

#[test]
fn poly_then_verify() {
    let d = scratch("verify");
    for name in ["db.txt", "db.crpoly"] {
        let out = d.join(name);
        let o = crtool(&["poly", "double-banana", "--placements", "2", "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let o = crtool(&["--format", "json", "verify", out.to_str().unwrap(), "--placements", "10"]);
        assert!(o.status.success());
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["vanished"], 10);
        assert_eq!(v["nontrivial"], true);
    }
    std::fs::write(d.join("x.txt"), "1 [1,2]^1\n").unwrap();
    let o = crtool(&["verify", d.join("x.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    std::fs::remove_dir_all(d).unwrap();
}

#[test]
fn cache_dir_flag_and_env_override() {
    let flag = scratch("flag");
    let env = scratch("env");
    let o = Command::new(env!("CARGO_BIN_EXE_crtool"))
        .args(["--cache-dir", flag.to_str().unwrap(), "poly", "double-banana", "--placements", "1"])
        .env("CRTOOL_CACHE_DIR", &env)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read_dir(&flag).unwrap().count(), 0);
    assert!(std::fs::read_dir(&env).unwrap().count() >= 2);
    let o = crtool(&["--cache-dir", flag.to_str().unwrap(), "poly", "double-banana", "--placements", "1"]);
    assert!(o.status.success());
    assert!(std::fs::read_dir(&flag).unwrap().count() >= 2);
    std::fs::remove_dir_all(flag).unwrap();
    std::fs::remove_dir_all(env).unwrap();
}

#[test]
fn crtree_and_decompose_json() {
    let o = crtool(&["--format", "json", "crtree", "double-banana", "--mode", "splits", "--limit", "1", "--expand"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trees"].as_array().unwrap().len(), 1);
    let steps = v["trees"][0]["cost"]["nodes"].as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0]["dimension"], 4);
    assert_eq!(steps[0]["homogeneous_bound"], 8);
    let o = crtool(&["--format", "json", "decompose", "w5", "--mode", "3conn"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["decompositions"].as_array().unwrap().is_empty());
}

#[test]
fn bench_custom_suite() {
    let d = scratch("bench");
    let suite = d.join("suite.json");
    std::fs::write(
        &suite,
        r#"{"name": "small", "limits": {"max_terms": 100000}, "cases": [{"graph": "double-banana", "strategies": [
            {"name": "2-split", "expect": "completed", "terms": 1752},
            {"name": "two W4", "root": "2,3,4,5:3-4", "expect": "resource_exhausted"}]}]}"#,
    )
    .unwrap();
    let o = crtool(&["--repetitions", "3", "--jobs", "2", "bench", suite.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("ok   double-banana").count(), 2);
    std::fs::write(&suite, r#"{"name": "bad", "cases": [{"graph": "double-banana", "strategies": [
            {"name": "2-split", "expect": "completed", "terms": 1}]}]}"#)
    .unwrap();
    assert_eq!(crtool(&["--repetitions", "1", "bench", suite.to_str().unwrap()]).status.code(), Some(3));
    std::fs::remove_dir_all(d).unwrap();
}
