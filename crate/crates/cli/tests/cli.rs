use std::process::{Command, Output};

fn sclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sclab"))
        .args(args)
        .env_remove("SCLAB_CACHE")
        .output()
        .expect("binary runs")
}

fn verify(group: &str, prime: &str, suite: &str, extra: &[&str]) -> Output {
    let mut args = vec!["verify", "--group", group, "--prime", prime, "--suite", suite];
    args.extend_from_slice(extra);
    sclab(&args)
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn d8_all_suites_pass() {
    let out = verify("builtin:D8", "2", "all", &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["edges"].as_array().unwrap().len(), 29);
    assert_eq!(r["summary"]["mismatch"], 0);
    assert!(r["counterexamples"].as_array().unwrap().iter().all(|c| c["reproduced"] == true));
}

#[test]
fn reports_are_deterministic() {
    let a = verify("builtin:S4", "2", "all", &[]);
    let b = verify("builtin:S4", "2", "all", &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn markdown_has_one_row_per_edge() {
    let out = verify("builtin:A4", "2", "table31", &["--format", "markdown"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("| table31 |")).count(), 17);
}

#[test]
fn report_file_and_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let group = dir.path().join("z3.txt");
    std::fs::write(&group, "# cyclic of order 3\ndegree 3\ngen (0 1 2)\n").unwrap();
    let report = dir.path().join("out.json");
    let out = verify(
        group.to_str().unwrap(),
        "3",
        "table44",
        &["--report", report.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["group"]["order"], 3);
    assert_eq!(r["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let first = verify("builtin:S4", "3", "inclusions", &["--cache", cache.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(&cache).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = verify("builtin:S4", "3", "inclusions", &["--cache", cache.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    assert!(second.stderr.is_empty());
}

#[test]
fn corrupt_cache_is_replaced() {
    let dir = tempfile::tempdir().unwrap();
    let first = verify("builtin:S3", "2", "conditions", &["--cache", dir.path().to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&entry, "{\"format_version\": 1}").unwrap();
    let again = verify("builtin:S3", "2", "conditions", &["--cache", dir.path().to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(first.stdout, again.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("stale cache"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_sclab"))
        .args(["verify", "--group", "builtin:Q8", "--prime", "2", "--suite", "conditions"])
        .env("SCLAB_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn exit_codes_for_errors() {
    assert_eq!(verify("builtin:Nope", "2", "all", &[]).status.code(), Some(11));
    assert_eq!(verify("builtin:S3", "5", "all", &[]).status.code(), Some(13));
    assert_eq!(verify("builtin:S5", "2", "all", &["--max-order", "60"]).status.code(), Some(12));
    assert_eq!(verify("/nonexistent/group.txt", "2", "all", &[]).status.code(), Some(14));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "degree 3\ngen (0 1 7)\n").unwrap();
    assert_eq!(verify(bad.to_str().unwrap(), "2", "all", &[]).status.code(), Some(10));
}

#[test]
fn simplex_cap_makes_edges_inconclusive() {
    let loose = verify("builtin:S4", "2", "table31", &["--max-simplices", "3"]);
    let r = json(&loose);
    assert!(r["summary"]["inconclusive"].as_u64().unwrap() > 0);
    assert_eq!(loose.status.code(), Some(0));
    let strict = verify("builtin:S4", "2", "table31", &["--max-simplices", "3", "--strict"]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = verify("builtin:D8", "2", "everything", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}
