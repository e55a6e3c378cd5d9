//! End-to-end tests of the `beltrami` binary: output bytes, exit codes,
//! and the vector replay harness.

use std::path::PathBuf;
use std::process::{Command, Output};

fn beltrami(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("vectors")
        .join("golden.jsonl")
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("beltrami-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file is writable");
    path
}

#[test]
fn analyze_emits_the_exact_report() {
    let out = beltrami(&["analyze", "--d", "-1", "--pair", "2", "0", "1", "0"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let expected = concat!(
        r#"{"d":"-1","map":{"a":{"a":"2","b":"0"},"b":{"a":"1","b":"0"}},"#,
        r#""linear_part":{"a":"2","b":"0"},"anti_part":{"a":"1","b":"0"},"#,
        r#""beltrami":{"a":"1/2","b":"0"},"dcal_mu":"1/4","#,
        r#""dilatation":{"rep":{"g11":"1","g12":"0","g22":"1/9"},"tag":"regular"},"#,
        r#""classification":"regular","theorem_check":true}"#,
    );
    assert_eq!(stdout(&out).trim_end(), expected);
}

#[test]
fn analyze_is_deterministic() {
    let args = ["analyze", "--d", "2", "--pair", "1", "0", "1", "1"];
    let first = beltrami(&args);
    let second = beltrami(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains(r#""classification":"exceptional""#));
}

#[test]
fn matrix_and_pair_inputs_agree() {
    let from_pair = beltrami(&["analyze", "--d", "-1", "--pair", "2", "0", "1", "0"]);
    let from_matrix = beltrami(&["analyze", "--d", "-1", "--matrix", "3", "0", "0", "1"]);
    assert_eq!(from_matrix.status.code(), Some(0));
    assert_eq!(from_pair.stdout, from_matrix.stdout);
}

#[test]
fn pretty_output_parses_to_the_same_report() {
    let compact = beltrami(&["analyze", "--d", "-1", "--pair", "2", "0", "1", "0"]);
    let pretty = beltrami(&["analyze", "--d", "-1", "--pair", "2", "0", "1", "0", "--pretty"]);
    assert_eq!(pretty.status.code(), Some(0));
    let a: serde_json::Value = serde_json::from_str(&stdout(&compact)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&pretty)).unwrap();
    assert_eq!(a, b);
    assert!(stdout(&pretty).lines().count() > 1);
}

#[test]
fn square_discriminant_exits_3() {
    for d in ["4", "4/9", "0"] {
        let out = beltrami(&["analyze", "--d", d, "--pair", "1", "0", "0", "0"]);
        assert_eq!(out.status.code(), Some(3), "d = {d}");
        assert!(stderr(&out).contains("--d"), "d = {d}");
    }
}

#[test]
fn zero_map_exits_4() {
    let out = beltrami(&["analyze", "--d", "-1", "--pair", "0", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("zero map"));
}

#[test]
fn unparsable_input_exits_2() {
    let bad_rational = beltrami(&["analyze", "--d", "1.5", "--pair", "1", "0", "0", "0"]);
    assert_eq!(bad_rational.status.code(), Some(2));
    assert!(stderr(&bad_rational).contains("--d"));

    let bad_pair = beltrami(&["analyze", "--d", "-1", "--pair", "1", "x", "0", "0"]);
    assert_eq!(bad_pair.status.code(), Some(2));
    assert!(stderr(&bad_pair).contains("a.b"));

    // clap usage errors: no map given, or both presentations at once
    let missing = beltrami(&["analyze", "--d", "-1"]);
    assert_eq!(missing.status.code(), Some(2));
    let both = beltrami(&[
        "analyze", "--d", "-1", "--pair", "1", "0", "0", "0", "--matrix", "1", "0", "0", "1",
    ]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn vectors_replay_the_golden_file() {
    let out = beltrami(&["vectors", "--file", golden_path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim_end(), "4/4 passed");
}

#[test]
fn vectors_accept_an_empty_file() {
    let path = temp_file("empty.jsonl", "");
    let out = beltrami(&["vectors", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim_end(), "0/0 passed");
}

#[test]
fn corrupted_expectation_fails_and_names_the_field() {
    let good = std::fs::read_to_string(golden_path()).unwrap();
    let corrupted = good.replace(r#""dcal_mu":"1/4""#, r#""dcal_mu":"1/3""#);
    assert_ne!(good, corrupted);
    let path = temp_file("corrupted.jsonl", &corrupted);
    let out = beltrami(&["vectors", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim_end(), "3/4 passed");
    assert!(stderr(&out).contains("dcal_mu"));
}

#[test]
fn malformed_vector_file_exits_2() {
    let path = temp_file("malformed.jsonl", "{not json\n");
    let out = beltrami(&["vectors", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = beltrami(&["vectors", "--file", "/nonexistent/vectors.jsonl"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("--file"));
}
