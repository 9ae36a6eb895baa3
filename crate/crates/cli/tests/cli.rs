use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckesym"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = run(&["--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn caps_need_force() {
    let out = run(&["--suite", "braiding-6.4", "--d", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["--suite", "hecke-axioms", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_values_are_usage_errors() {
    assert_eq!(run(&["--q", "x"]).status.code(), Some(2));
    assert_eq!(run(&["--mu", "e^{i pi/0}"]).status.code(), Some(2));
    assert_eq!(run(&["--mu", "3/2", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--d", "3..2"]).status.code(), Some(2));
    assert_eq!(run(&["--mode", "fuzzy"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    let args = ["--suite", "lemma-5.4", "--d", "2..3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(doc["meta"]["elapsed"].is_null());
    assert_eq!(doc["meta"]["flags"]["suite"], "lemma-5.4");
    let results = doc["results"].as_array().unwrap();
    assert!(!results.is_empty());
    assert!(results.iter().all(|r| r["status"] != "fail"));
}

#[test]
fn timings_go_to_metadata() {
    let out = run(&["--suite", "braiding-6.4", "--d", "2", "--timings", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["meta"]["elapsed"].is_object());
    assert!(doc["results"][0].get("elapsed_ms").is_none());
}

#[test]
fn markdown_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.md");
    let out = run(&[
        "--suite",
        "prop-4.3",
        "--d",
        "2",
        "--format",
        "markdown",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("## Cross reference"));
    assert!(text.contains("prop-4.3"));
}

#[test]
fn root_of_unity_point() {
    let out = run(&["--suite", "prop-4.4", "--d", "2", "--mu", "e^{i pi/5}"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["results"][0]["status"], "pass");
    // not on the unit circle: the precondition is reported, not failed
    let out = run(&["--suite", "prop-4.4", "--d", "2", "--mu", "3/2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["results"][0]["status"], "skipped");
}

#[test]
fn lambda_is_classified() {
    let out = run(&["--suite", "thm-3.3", "--d", "2", "--n", "2", "--q", "2", "--lambda", "-1/3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let classify = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["check_id"] == "thm-3.3a-classify")
        .unwrap();
    assert_eq!(classify["params"]["class"], "ladder(-2)");
}
