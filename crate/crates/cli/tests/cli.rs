use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperpath")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_the_star() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.h3");
    let out = run(&["gen", "--kind", "star", "--n", "8", "--k", "1", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("p h3 8 21\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 21);
}

#[test]
fn oracle_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.h3");
    let path = file.to_str().unwrap();
    assert_eq!(run(&["gen", "--kind", "complete", "--n", "4", "--out", path]).status.code(), Some(0));

    let absent = run(&["oracle", "-i", path, "--path", "2"]);
    assert_eq!(absent.status.code(), Some(1));
    assert_eq!(stdout(&absent).trim(), "absent");

    let present = run(&["oracle", "-i", path, "--path", "1"]);
    assert_eq!(present.status.code(), Some(0));
    assert!(stdout(&present).starts_with("path: "));

    let missing = run(&["oracle", "-i", dir.path().join("none.h3").to_str().unwrap(), "--path", "1"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error: "));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.h3");
    fs::write(&file, "p h3 4 1\ne 1 2 9\n").unwrap();
    let out = run(&["find", "-i", file.to_str().unwrap(), "-t", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_construction_reports_degree() {
    let out = run(&["verify", "--construction", "star", "--n", "12", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("check min_degree: expected 10 observed 10 PASS"), "{text}");
    assert!(text.trim_end().ends_with("result: PASS"));
}

#[test]
fn find_cross_checks_small_instances() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.h3");
    let path = file.to_str().unwrap();
    run(&["gen", "--kind", "star", "--n", "9", "--k", "1", "--out", path]);
    let out = run(&["find", "-i", path, "-t", "3", "--trace"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(1), "{text}");
    assert!(text.contains("hypothesis_unmet"), "{text}");
    assert!(text.contains("oracle: absent"));
    assert!(text.contains("agreement: yes"));
}

#[test]
fn experiments_are_reproducible() {
    let args = ["experiment", "--n", "23", "--delta", "29", "-t", "3", "--trials", "5", "--seed", "9"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().last().unwrap().contains("success_rate=1.000000 (5/5)"));
}
