use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsemigroup")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn irreducibles_text() {
    let text = stdout(&["irreducibles", "-A", "4", "-F", "11"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("<4,6,9> | F=11 g=6"), "{}", lines[0]);
    assert!(lines[1].starts_with("<4,5> |"));
    assert!(lines[2].starts_with("<2,13> |"));
}

#[test]
fn json_key_order() {
    let text = stdout(&["--format", "json", "irreducibles", "-A", "4", "-F", "11"]);
    let first = text.lines().next().unwrap();
    let keys = ["\"kind\"", "\"msg\"", "\"frobenius\"", "\"genus\"", "\"gaps\"", "\"elements\""];
    let pos: Vec<usize> = keys.iter().map(|k| first.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{first}");
    let v: serde_json::Value = serde_json::from_str(first).unwrap();
    assert_eq!(v["kind"], "semigroup");
    assert_eq!(v["msg"], serde_json::json!([4, 6, 9]));
    assert_eq!(v["frobenius"], 11);
}

#[test]
fn semigroups_count() {
    assert_eq!(stdout(&["semigroups", "-A", "4", "-F", "11"]).lines().count(), 8);
}

#[test]
fn solve_and_maximal() {
    let text = stdout(&["solve", "-A", "4,9", "-B", "11,14"]);
    assert!(text.starts_with("{1,2,3,5,6,7,10,11,14} | <4,9,15> | F=14"), "{text}");
    let text = stdout(&["maximal", "-A", "4,9", "-B", "11,14"]);
    assert!(text.starts_with("<4,9,15> |"), "{text}");
    let text = stdout(&["maximal", "-A", "4,9", "-B", "11,14", "--apery"]);
    assert!(text.starts_with("(16,17,18,4,20,21,22,8,9,25,26,12,13,29) |"), "{text}");
}

#[test]
fn oracle_matches_solver() {
    let fast = stdout(&["solve", "-A", "4", "-B", "9,11"]);
    let slow = stdout(&["oracle", "hitting-sets", "-A", "4", "-B", "9,11"]);
    assert_eq!(fast, slow);
    let fast = stdout(&["irreducibles", "-A", "3", "-F", "13"]);
    let slow = stdout(&["oracle", "irreducibles", "-A", "3", "-F", "13"]);
    assert_eq!(fast, slow);
}

#[test]
fn deterministic_across_runs_and_threads() {
    let args = ["semigroups", "-A", "5", "-F", "16"];
    let once = stdout(&args);
    assert_eq!(once, stdout(&args));
    let par = stdout(&["--parallel", "4", "semigroups", "-A", "5", "-F", "16"]);
    assert_eq!(once, par);
}

#[test]
fn limit_truncates_with_note() {
    let out = run(&["--limit", "2", "semigroups", "-A", "4", "-F", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn exit_codes() {
    let out = run(&["irreducibles", "-A", "4", "-F", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("8 = 2·4"));
    assert_eq!(run(&["solve", "-A", "4", "-B", "8"]).status.code(), Some(2));
    assert_eq!(run(&["irreducibles", "-F", "0"]).status.code(), Some(1));
    assert_eq!(run(&["irreducibles", "-A", "x", "-F", "5"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "-B", "0"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["irreducibles", "-F", "300"]).status.code(), Some(3));
    assert_eq!(run(&["oracle", "semigroups", "-F", "17"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
