//! End-to-end coverage of the command-line surface: the captured driver
//! for most cases, plus the real compiled binary for exit-code wiring.

use serde_json::Value;

use quadideal::cli::{run_from_args, RunResult};

fn run(args: &[&str]) -> RunResult {
    run_from_args(std::iter::once("quadideal").chain(args.iter().copied()))
}

#[test]
fn check_cdr_structured_reports_the_dedekind_verdict() {
    let result = run(&["--ring", "d=-5,f=1", "check-cdr", "--norm-bound", "10", "--structured"]);
    assert_eq!(result.exit_code, 0);
    let report: Value = serde_json::from_str(&result.stdout).unwrap();
    assert_eq!(report["ring"]["d"], Value::from(-5));
    assert_eq!(report["ring"]["f"], Value::from(1));
    assert_eq!(report["result"]["verdict"], "cdr_up_to_bound");
    assert_eq!(report["violations"], Value::Array(vec![]));
}

#[test]
fn divide_by_the_noninvertible_prime_fails_loudly() {
    let result = run(&["--ring", "d=-3,f=2", "divide", "--I", "2", "--J", "2, w"]);
    assert_eq!(result.exit_code, 1);
    assert!(result.stderr.contains("error[not_divisible]"));
    assert!(result.stderr.contains("containment-division violation"));
}

#[test]
fn divide_by_a_generating_pair_with_coprime_norms_is_trivial() {
    // In d=-3,f=2 the element 1+w has norm 7, so (2, 1+w) contains both
    // 2 and 7 and is therefore the unit ideal; dividing by it succeeds
    // with the dividend itself as witness.
    let hnf = run(&["--ring", "d=-3,f=2", "hnf", "--I", "2, 1+w"]);
    assert_eq!(hnf.stdout.trim(), "[1, 0+1*w]");
    let result = run(&["--ring", "d=-3,f=2", "divide", "--I", "2", "--J", "2, 1+w"]);
    assert_eq!(result.exit_code, 0);
    assert!(result.stdout.contains("witness H with I = H*J: [2, 0+2*w]"));
}

#[test]
fn factor_six_prints_four_primes_and_the_reconstruction() {
    let result = run(&["--ring", "d=-5,f=1", "factor", "--I", "6"]);
    assert_eq!(result.exit_code, 0);
    let factors_line = result
        .stdout
        .lines()
        .find(|line| line.starts_with("factors:"))
        .expect("factors line present");
    assert_eq!(factors_line.matches("[").count(), 4);
    assert!(result.stdout.contains("product reconstructs I: [6, 0+6*w]"));
}

#[test]
fn ring_info_smoke() {
    let result = run(&["--ring", "d=-3,f=2", "ring-info"]);
    assert_eq!(result.exit_code, 0);
    assert!(result.stdout.contains("theta minimal polynomial: x^2 - 2*x + 4"));
    assert!(result.stdout.contains("maximal order: no"));
}

#[test]
fn structured_factor_report_is_stable() {
    let args = ["--ring", "d=-1,f=1", "factor", "--I", "8", "--structured"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
    let report: Value = serde_json::from_str(&first.stdout).unwrap();
    assert_eq!(report["chain"]["steps"].as_array().unwrap().len(), 6);
}

#[test]
fn real_binary_encodes_verdicts_in_the_exit_status() {
    let binary = env!("CARGO_BIN_EXE_quadideal");
    let good = std::process::Command::new(binary)
        .args(["--ring", "d=-5,f=1", "check-cdr", "--norm-bound", "10"])
        .output()
        .unwrap();
    assert_eq!(good.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&good.stdout).contains("verdict: cdr_up_to_bound"));

    let bad = std::process::Command::new(binary)
        .args(["--ring", "d=-3,f=2", "check-cdr", "--norm-bound", "8"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("verdict: not_cdr"));

    let usage = std::process::Command::new(binary)
        .args(["--ring", "d=-5,f=1", "divide", "--I", "2 +", "--J", "2"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let help = std::process::Command::new(binary).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
