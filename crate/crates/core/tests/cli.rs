//! End-to-end runs of the binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonic-cv")).args(args).output().expect("spawn binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_text_line() {
    let o = run(&["eval", "--theorem", "thm-a", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "theorem f1t0 n=1 lhs=-3/1 rhs=-3/1 equal=true status=ok micros=0\n");
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("summary: checks=1 ok=1 fail=0"));
}

#[test]
fn eval_json_record() {
    let o = run(&["eval", "--theorem", "f1t0", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    for k in ["check", "id", "n", "lhs", "rhs", "equal", "status", "micros"] {
        assert!(keys.iter().any(|x| x == k), "missing {k}");
    }
    assert_eq!(v["lhs"], "-3/1");
    assert_eq!(v["equal"], true);
}

#[test]
fn eval_csv_record() {
    let o = run(&["--format", "csv", "eval", "--theorem", "thm-g", "--n", "2"]);
    assert_eq!(
        stdout(&o),
        "check,id,n,lhs,rhs,equal,status,micros\ntheorem,f3t0,2,-23/32,-23/32,true,ok,0\n"
    );
}

#[test]
fn relations_at_zero() {
    let o = run(&["verify-relations", "--n-max", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn records_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theorems.ndjson");
    let o = run(&["verify-theorems", "--n-max", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 12 * 5);
    assert!(body.lines().all(|l| l.contains("\"status\":\"ok\"")));
}

#[test]
fn unwritable_output_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.txt");
    let o = run(&["verify-theorems", "--n-max", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["verify-kernels", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--theorem", "thm-z", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify-kernels", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn kernels_report_pole_skips_without_failing() {
    let o = run(&["verify-kernels", "--samples", "200", "--seed", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1 + 9 * 200);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true,ok,0") || l.contains(",pole-skipped,")));
}

#[test]
fn derivations_subset() {
    let o = run(&["verify-derivations", "--n-max", "5", "--ids", "thm-c,thm-l", "--parallel", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().take(6).all(|l| l.starts_with("derivation f1t2 ")));
    assert!(out.lines().skip(6).all(|l| l.starts_with("derivation f4t2 ")));
}

#[test]
fn seed_changes_samples() {
    let a = run(&["verify-cv", "--samples", "20", "--seed", "1"]);
    let b = run(&["verify-cv", "--samples", "20", "--seed", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn bench_lists_every_theorem() {
    let o = run(&["bench", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("bench ")).count(), 12);
}
