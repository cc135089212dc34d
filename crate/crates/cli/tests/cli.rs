use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hyperoct(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperoct"));
    cmd.args(args).env_remove("HYPEROCT_CACHE");
    if let Some(dir) = cache {
        cmd.env("HYPEROCT_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

fn json_report(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("json report")
}

fn without_timing(mut v: Value) -> Value {
    v["elapsed_ms"] = Value::from(0);
    v
}

#[test]
fn tables_b2_passes_and_prints_rows() {
    let o = hyperoct(&["verify", "tables-b2", "--n", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("chi(1|1): 2 0 0 0 -2"));
    assert!(text.contains("s1: z2 | t2: z1 | s1t2: z2 | -1: -z1"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn hilbert_json_schema() {
    let o = hyperoct(&["verify", "hilbert", "--n", "5", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json_report(&o);
    assert_eq!(v["suite"], "hilbert");
    assert_eq!(v["n"], 5);
    assert!(v["elapsed_ms"].is_u64());
    let checks = v["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        let keys: Vec<&str> = c.as_object().expect("object").keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 4);
        for k in ["id", "anchor", "status", "witness"] {
            assert!(c.get(k).is_some(), "missing {k}");
        }
        assert_eq!(c["status"], "pass");
    }
    assert_eq!(checks[0]["witness"], "[1, 25, 230, 950, 1689, 945]");
}

#[test]
fn idempotents_rank_one_shows_elements() {
    let o = hyperoct(&["verify", "idempotents", "--n", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("g(1|) = 1/2*[-1] + 1/2*[1]"));
    assert!(text.contains("g(|1) = -1/2*[-1] + 1/2*[1]"));
}

#[test]
fn out_of_bounds_is_a_usage_error() {
    for (suite, n) in [("tau", "0"), ("tau", "5"), ("tables-b2", "3"), ("recursion", "1"), ("all", "6")] {
        let o = hyperoct(&["verify", suite, "--n", n], None);
        assert_eq!(o.status.code(), Some(2), "{suite} {n}");
        assert!(o.stdout.is_empty());
        assert!(String::from_utf8_lossy(&o.stderr).contains("accepts n in"));
    }
}

#[test]
fn malformed_invocations_are_usage_errors() {
    for args in [
        &["verify", "nonsense", "--n", "2"][..],
        &["verify", "tau"][..],
        &["verify", "tau", "--n", "two"][..],
        &["verify", "tau", "--n", "2", "--format", "xml"][..],
    ] {
        assert_eq!(hyperoct(args, None).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn warm_cache_reproduces_cold_report() {
    let dir = tempfile::tempdir().expect("tempdir");
    let args = ["verify", "main-iso", "--n", "3", "--format", "json"];
    let cold = hyperoct(&args, Some(dir.path()));
    assert_eq!(cold.status.code(), Some(0));
    let names: Vec<String> = fs::read_dir(dir.path())
        .expect("cache dir")
        .map(|e| e.expect("entry").file_name().to_string_lossy().into_owned())
        .collect();
    assert!(names.contains(&"character_table_3.json".to_string()), "{names:?}");
    assert!(names.contains(&"rewrite_graded_3.json".to_string()), "{names:?}");
    let warm = hyperoct(&args, Some(dir.path()));
    assert_eq!(warm.status.code(), Some(0));
    assert!(warm.stderr.is_empty());
    assert_eq!(without_timing(json_report(&cold)), without_timing(json_report(&warm)));
}

#[test]
fn corrupt_cache_entries_are_rebuilt() {
    let dir = tempfile::tempdir().expect("tempdir");
    let args = ["verify", "characters", "--n", "2", "--format", "json"];
    let clean = hyperoct(&args, None);
    fs::write(dir.path().join("character_table_2.json"), "{ not json").expect("write");
    let first = hyperoct(&args, Some(dir.path()));
    assert_eq!(first.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&first.stderr).contains("discarding cache entry"));
    assert_eq!(without_timing(json_report(&clean)), without_timing(json_report(&first)));
    let rebuilt = fs::read_to_string(dir.path().join("character_table_2.json")).expect("rewritten");
    assert!(serde_json::from_str::<Value>(&rebuilt).is_ok());
}

#[test]
fn tampered_table_is_rejected() {
    let dir = tempfile::tempdir().expect("tempdir");
    let args = ["verify", "characters", "--n", "2", "--format", "json"];
    let clean = hyperoct(&args, Some(dir.path()));
    let path = dir.path().join("character_table_2.json");
    let original = fs::read_to_string(&path).expect("cached table");
    // well formed, but no longer orthonormal
    let tampered = original.replacen("\"-2/1\"", "\"-3/1\"", 1);
    assert_ne!(original, tampered);
    fs::write(&path, tampered).expect("write");
    let rerun = hyperoct(&args, Some(dir.path()));
    assert_eq!(rerun.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&rerun.stderr).contains("discarding cache entry"));
    assert_eq!(without_timing(json_report(&clean)), without_timing(json_report(&rerun)));
}

#[test]
fn unusable_cache_directory_only_warns() {
    let dir = tempfile::tempdir().expect("tempdir");
    let blocker = dir.path().join("occupied");
    fs::write(&blocker, "a file, not a directory").expect("write");
    let o = hyperoct(&["verify", "tau", "--n", "2"], Some(&blocker));
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn out_flag_writes_report_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.json");
    let o = hyperoct(
        &["verify", "gn1", "--n", "2", "--format", "json", "--out", path.to_str().expect("utf8 path")],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).expect("report")).expect("json");
    assert_eq!(v["suite"], "gn1");
}

#[test]
fn all_suite_reports_coverage() {
    let o = hyperoct(&["verify", "all", "--n", "1", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json_report(&o);
    let checks = v["checks"].as_array().expect("checks");
    assert_eq!(checks[0]["id"], "coverage");
    let witness = checks[0]["witness"].as_str().expect("witness");
    assert!(witness.contains("recursion"), "{witness}");
    assert!(checks.iter().any(|c| c["id"].as_str().is_some_and(|s| s.starts_with("tables-b2/"))));
}
