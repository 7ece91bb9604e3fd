//! End-to-end tests of the command-line binary: report contents, file
//! handling and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("crcodes-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file writes");
    path
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

const REP6: &str = "6 2\n000000\n111111\n";

const REP6_GROUP: &str = "6 2\n\
    sigma := (1 2) | g := const (0 1)\n\
    sigma := (1 2 3 4 5 6) | g := const (0 1)\n";

const TWISTED_GROUP: &str = "6 2\n\
    sigma := (2 3 4 5 6) | g := const ()\n\
    sigma := (1 2)(3 6) | g := const ()\n\
    sigma := (3 4 6 5) | g := const (0 1)\n";

#[test]
fn analyze_repetition_code() {
    let code = write_temp("rep6.txt", REP6);
    let output = run(&["analyze", code.to_str().unwrap()]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("format-version: 1\n"));
    assert!(text.contains("min-distance: 6\n"));
    assert!(text.contains("covering-radius: 3\n"));
    assert!(text.contains("partition-sizes: 2 12 30 20\n"));
    assert!(text.contains("completely-regular: true\n"));
}

#[test]
fn analyze_single_word_code() {
    let code = write_temp("single.txt", "5 2\n00000\n");
    let output = run(&["analyze", code.to_str().unwrap()]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("min-distance: absent\n"));
    assert!(text.contains("covering-radius: 5\n"));
}

#[test]
fn analyze_reports_parse_errors_with_line_numbers() {
    let code = write_temp("bad.txt", "4 2\n0000\n0021\n");
    let output = run(&["analyze", code.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let err = stderr(&output);
    assert!(err.contains("line 3"), "stderr: {err}");
}

#[test]
fn check_transitive_complete_case() {
    let code = write_temp("rep6b.txt", REP6);
    let group = write_temp("group6.txt", REP6_GROUP);
    let output = run(&[
        "check-transitive",
        code.to_str().unwrap(),
        group.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("transitivity-level: 3\n"));
    assert!(text.contains("completely-transitive: true\n"));
    assert!(text.contains("kernel-trivial: true\n"));
    assert!(text.contains("group-order: 720\n"));
}

#[test]
fn check_transitive_split_case() {
    let code = write_temp("rep6c.txt", REP6);
    let group = write_temp("twisted.txt", TWISTED_GROUP);
    let output = run(&[
        "check-transitive",
        code.to_str().unwrap(),
        group.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("transitivity-level: 2\n"));
    assert!(text.contains("completely-transitive: false\n"));
    assert!(text.contains("group-order: 120\n"));
    assert!(text.contains("split: orbit of"), "text: {text}");
}

#[test]
fn check_transitive_shape_mismatch() {
    let code = write_temp("rep5.txt", "5 2\n00000\n11111\n");
    let group = write_temp("group6b.txt", REP6_GROUP);
    let output = run(&[
        "check-transitive",
        code.to_str().unwrap(),
        group.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn nonexist_certificate_and_exit_codes() {
    let output = run(&["nonexist", "16", "5"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("overall: infeasible"));
    assert!(text.contains("branch all-ones absent, rho = 6: closed"));
    assert!(text.contains("verdict: infeasible"));
    let output = run(&["nonexist", "12", "5"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("unsupported"));
}

#[test]
fn orbits_on_triples() {
    let group = write_temp("psl.txt", "degree 6\n(2 3 4 5 6)\n(1 2)(3 6)\n");
    let output = run(&["orbits", group.to_str().unwrap(), "-k", "3"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("orbit-count: 2\n"));
    assert!(text.contains("orbit-0: size 10"));
    assert!(text.contains("orbit-1: size 10"));
    let s6 = write_temp("s6.txt", "degree 6\n(1 2)\n(1 2 3 4 5 6)\n");
    let output = run(&["orbits", s6.to_str().unwrap(), "-k", "3"]);
    assert!(stdout(&output).contains("orbit-count: 1\n"));
}

#[test]
fn orbits_rejects_malformed_files() {
    let group = write_temp("badgroup.txt", "degree 6\n(1 9)\n");
    let output = run(&["orbits", group.to_str().unwrap(), "-k", "2"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("line 2"));
}

#[test]
fn replay_by_id_and_unknown_id() {
    let output = run(&["replay", "orbit-counting-bound"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("replay orbit-counting-bound: pass"));
    let output = run(&["replay", "no-such-id"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn replay_all_writes_report_files() {
    let dir = std::env::temp_dir().join(format!("crcodes-reports-{}", std::process::id()));
    let output = run(&[
        "replay",
        "--all",
        "--report-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("replay two-word-regular-codes: pass"));
    assert!(text.contains("replay nonexistence-certificates: pass"));
    let report = std::fs::read_to_string(dir.join("twisted-group-orbit-split.txt")).unwrap();
    assert!(report.contains("overall: pass"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn machine_output_is_json() {
    let code = write_temp("rep6d.txt", REP6);
    let output = run(&["--machine", "analyze", code.to_str().unwrap()]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with('{'));
    assert!(text.contains("\"format-version\": \"1\""));
    assert!(text.contains("\"min-distance\": \"6\""));
}

#[test]
fn budget_flags_map_to_resource_exit() {
    let code = write_temp("rep6e.txt", REP6);
    let output = run(&["--max-vertices", "10", "analyze", code.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr(&output).contains("budget"));
}

#[test]
fn code_file_round_trip_through_analyze() {
    // Parsing accepts spaced digits and comments; the canonical rendering
    // used in reports is stable.
    let code = write_temp("spaced.txt", "# comment\n4 3\n0 0 0 0\n2221\n1110\n");
    let output = run(&["analyze", code.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("size: 3\n"));
}
