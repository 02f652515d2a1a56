//! Exit codes, error locations and file handling of the binary.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn tarski_stdin(args: &[&str], input: &str) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tarski"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

const FREE_PAIR: &str = r#"{"action":{"kind":"free","rank":2},"tuple":["a","aX"],"partition":[{"kind":"full"}]}"#;

#[test]
fn bad_letter_reports_path_and_offset() {
    for command in [&["con", "compute"][..], &["eq", "solve"]] {
        let (code, r) = tarski_stdin(command, FREE_PAIR);
        assert_eq!(code, 2);
        assert_eq!(r["status"], "error");
        assert_eq!(r["error"]["kind"], "parse");
        assert_eq!(r["error"]["path"], "$.tuple[1]");
        assert_eq!(r["error"]["offset"], 1);
    }
}

#[test]
fn bad_letter_inside_set_expression() {
    let doc = r#"{"action":{"kind":"free","rank":2},
        "decomposition":{"a":[{"piece":{"kind":"cone","word":"abX"},"translator":"e"}],"b":[]}}"#;
    let (code, r) = tarski_stdin(&["paradox", "verify"], doc);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["path"], "$.decomposition.a[0].piece.word");
    assert_eq!(r["error"]["offset"], 2);
}

#[test]
fn malformed_json_reports_line_and_column() {
    let (code, r) = tarski_stdin(&["con", "compute"], "{\n  \"action\": [,\n}");
    assert_eq!(code, 2);
    assert_eq!(r["error"]["line"], 2);
    assert!(r["error"]["column"].as_u64().unwrap() > 0);
}

#[test]
fn schema_errors() {
    let cases = [
        (r#"{"action":{"kind":"free","rank":2},"tuple":[],"partition":[{"kind":"full"}],"extra":1}"#, "$.extra"),
        (r#"{"action":{"kind":"wobbly"},"tuple":["a"],"partition":[]}"#, "$.action.kind"),
        (
            r#"{"action":{"kind":"free","rank":2},"tuple":["a"],"partition":[{"kind":"points","points":[0]}]}"#,
            "$.partition[0]",
        ),
        (r#"{"action":{"kind":"free","rank":2},"tuple":["c"],"partition":[{"kind":"full"}]}"#, "$.tuple[0]"),
        (
            r#"{"action":{"kind":"free","rank":2},"tuple":["a"],"partition":[{"kind":"cone","word":"a"}]}"#,
            "$.partition",
        ),
        (
            r#"{"action":{"kind":"permutation","degree":3,"generators":[[0,0,1]]},"tuple":["a"],"partition":[]}"#,
            "$.action.generators[0]",
        ),
    ];
    for (doc, path) in cases {
        let (code, r) = tarski_stdin(&["con", "compute"], doc);
        assert_eq!(code, 2, "{doc}");
        assert_eq!(r["error"]["path"], path, "{doc}: {r}");
    }
}

#[test]
fn rational_syntax_is_checked() {
    let doc = r#"{"action":{"kind":"trivial","points":2},"tuple":["a"],
        "partition":[{"kind":"points","points":[0,1]}],"solution":["1/0"]}"#;
    let (code, r) = tarski_stdin(&["eq", "verify"], doc);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["path"], "$.solution[0]");
}

#[test]
fn search_bound_exceeded_exits_3() {
    let (code, r) =
        tarski_stdin(&["paradox", "search", "--bound-depth", "3"], r#"{"action":{"kind":"free","rank":2}}"#);
    assert_eq!(code, 3);
    assert_eq!(r["error"]["kind"], "bound_exceeded");
    assert_eq!(r["bounds"]["depth"], 3);
}

#[test]
fn search_on_finite_action_finds_nothing() {
    let doc = r#"{"action":{"kind":"permutation","degree":3,"generators":[[1,2,0]]}}"#;
    let (code, r) = tarski_stdin(&["paradox", "search", "--bound-pieces", "6"], doc);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "none_within_bounds");
    assert_eq!(r["bounds"]["pieces"], 6);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/z3-cycle.json");
    let status = Command::new(env!("CARGO_BIN_EXE_tarski"))
        .args(["con", "compute", "--input", fixture, "--output"])
        .arg(&out)
        .stdout(Stdio::piped())
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["count"], 3);
}

#[test]
fn missing_input_file() {
    let out = Command::new(env!("CARGO_BIN_EXE_tarski"))
        .args(["eq", "solve", "--input", "/nonexistent/input.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["error"]["kind"], "io");
}

#[test]
fn unknown_command_is_rejected() {
    let out = Command::new(env!("CARGO_BIN_EXE_tarski")).args(["eq", "frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
