use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn acmgon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acmgon"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = acmgon(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_reports_gonality() {
    let r = json(&["analyze", "1,2,3,4,5,3,2"]);
    assert_eq!(r["gonality"], 13);
    assert_eq!(r["clifford"], 11);
    assert_eq!(r["case"], "CaseA");
    assert_eq!(r["unique_pencil"], true);
    assert_eq!(r["candidates"][0]["class"], "LineMinusH(1)");
    assert_eq!(r["candidates"][0]["a"], serde_json::json!([1, 0]));
    assert_eq!(r["candidates_below"], serde_json::json!([]));
    let r = json(&["analyze", "{1,2,3,4,5,6,7,4,3}"]);
    assert_eq!(r["gonality"], 31);
    assert_eq!(r["e"], 6);
}

#[test]
fn bad_input_exits_two_with_code() {
    let out = acmgon(&["analyze", "1,2,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("REJECT_NOT_MONOTONE"));
    let out = acmgon(&["destabilize", "1,2,3,4,3,2", "--k", "15"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DELTA_NOT_POSITIVE"));
    let out = acmgon(&["link", "1,2,3,4,2,2", "--a", "2", "--b", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NOT_LINKABLE"));
}

#[test]
fn table_row_counts() {
    for (s, rows) in [(2, 2), (4, 8), (5, 16)] {
        let t = json(&["table", "--s", &s.to_string()]);
        assert_eq!(t.as_array().unwrap().len(), rows, "s = {s}");
    }
    let t = json(&["table", "--s", "5"]);
    assert!(t
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["lambda"] == serde_json::json!([1, 2]) && r["q"] == 34));
}

#[test]
fn destabilize_and_link() {
    let c = json(&["destabilize", "1,2,3,4,5,3,2", "--k", "13"]);
    assert_eq!(c.as_array().unwrap().len(), 1);
    assert_eq!(
        (c[0]["c"].as_i64(), c[0]["x"].as_i64()),
        (Some(-1), Some(-4))
    );
    let l = json(&["link", "1,2,3,4,5,6,7,4,3", "--a", "7", "--b", "7"]);
    assert_eq!(l["linked"], serde_json::json!([1, 2, 3, 4, 2, 2]));
}

#[test]
fn scan_lists() {
    let a = json(&["scan", "--k-offset", "5", "--d-max", "45"]);
    assert_eq!(a.as_array().unwrap().len(), 9);
    let b = json(&["scan", "--k-offset", "4", "--s-max", "4"]);
    let triples: Vec<(i64, i64)> = b
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["d"].as_i64().unwrap(), x["g"].as_i64().unwrap()))
        .collect();
    assert_eq!(triples, vec![(10, 11), (11, 14), (12, 17)]);
}

#[test]
fn stdin_batch() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_acmgon"))
        .args(["--format", "json", "analyze"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"1,2,3,4,5,3,2\n\n# comment\n1,2,3,4,5,6,7,4,3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let gons: Vec<i64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["gonality"].as_i64().unwrap())
        .collect();
    assert_eq!(gons, vec![13, 31]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--s-max", "7"][..],
        &["scan", "--k-offset", "4"],
        &["analyze", "1,2,3,4,5,5,4,2,1"],
    ] {
        let first = acmgon(args).stdout;
        let mut more = vec!["--jobs", "1"];
        more.extend_from_slice(args);
        assert_eq!(acmgon(&more).stdout, first, "{args:?}");
        assert_eq!(acmgon(args).stdout, first, "{args:?}");
    }
}

#[test]
fn examples_pass() {
    let out = acmgon(&["examples"]);
    assert!(out.status.success());
    assert!(!String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}
