//! End-to-end tests for the `betaforge` binary: output formats, exit
//! codes, environment overrides, and JSON round-tripping.

use std::process::{Command, Output};

use betaforge::report::MachineRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betaforge"))
        .args(args)
        .env_remove("BETAFORGE_PREC")
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], prec: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betaforge"))
        .args(args)
        .env("BETAFORGE_PREC", prec)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn beta_decimal_output() {
    let out = run(&["beta", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("0.915965594177"), "got {text:?}");

    let out = run(&["beta", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("0.996157828077"));
}

#[test]
fn beta_exact_output() {
    let out = run(&["beta", "7", "--exact"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "61/184320 * pi^7");

    let out = run(&["beta", "1", "--exact"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1/4 * pi^1");
}

#[test]
fn zeta_outputs() {
    let out = run(&["zeta", "4", "--exact"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1/90 * pi^4");

    let out = run(&["zeta", "2", "--exact"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1/6 * pi^2");

    let out = run(&["zeta", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("1.2020569031"));
}

#[test]
fn euler_outputs() {
    let out = run(&["euler", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1385");

    let out = run(&["euler", "6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "-61");

    let out = run(&["euler", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&run(&["beta", "0"])), 1);
    assert_eq!(code(&run(&["zeta", "1"])), 1);
    assert_eq!(code(&run(&["zeta", "0"])), 1);
    assert_eq!(code(&run(&["euler", "7"])), 1);
    assert_eq!(code(&run(&["beta", "2", "--prec", "16"])), 1);
    assert_eq!(code(&run(&["beta", "2", "--prec", "8192"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&[])), 1);
}

#[test]
fn no_closed_form_exit_3() {
    // even beta and odd zeta indices have no known pi-power closed form
    assert_eq!(code(&run(&["beta", "4", "--exact"])), 3);
    assert_eq!(code(&run(&["beta", "2", "--exact"])), 3);
    assert_eq!(code(&run(&["zeta", "3", "--exact"])), 3);
    assert_eq!(code(&run(&["zeta", "5", "--exact"])), 3);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["beta", "--help"])), 0);
}

#[test]
fn verify_pass_and_fail_codes() {
    let out = run(&["verify", "--max-s", "4", "--prec", "64"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("pass"), "got {text:?}");
    assert!(!text.contains("FAIL"), "got {text:?}");

    // precision below the supported floor is a usage error
    assert_eq!(code(&run(&["verify", "--max-s", "8", "--prec", "8"])), 1);

    // the deliberately uncorrected closed form must be reported as a failure
    let out = run(&["verify", "--max-s", "2", "--prec", "64", "--uncorrected-eq17"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn constants_table() {
    let out = run(&["constants"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("beta(1) = pi/4"), "got {text:?}");
    assert!(text.contains("beta(2) = G = 0.915965594177"), "got {text:?}");
    assert!(text.contains("0.996157828077"), "got {text:?}");
}

#[test]
fn env_precision_override() {
    // an invalid env value is a usage error; a valid one is honored
    assert_eq!(code(&run_env(&["beta", "2"], "16")), 1);

    let low = run_env(&["beta", "2"], "64");
    assert_eq!(code(&low), 0);
    let high = run_env(&["beta", "2"], "256");
    assert_eq!(code(&high), 0);
    // compare the leading decimal token; the rest of the line is the
    // radius annotation
    let low_value = stdout(&low).split_whitespace().next().unwrap().to_string();
    let high_value = stdout(&high).split_whitespace().next().unwrap().to_string();
    assert!(high_value.len() > low_value.len(), "{low_value} vs {high_value}");
    // the shorter printout must be a prefix of the longer one (truncation,
    // same underlying value)
    assert!(high_value.starts_with(&low_value));

    // explicit --prec wins over the environment
    let flag = run_env(&["beta", "2", "--prec", "64"], "256");
    assert_eq!(stdout(&flag), stdout(&low));
}

#[test]
fn json_records_round_trip() {
    let out = run(&["verify", "--max-s", "3", "--prec", "64", "--json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut count = 0;
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let record = MachineRecord::from_json_line(line).expect("parseable record");
        assert!(record.pass, "line {line}");
        // bit-identical round trip through the typed report
        let report = record.to_report().expect("valid record");
        let back = MachineRecord::from_report(&report);
        assert_eq!(back.to_json_line(), MachineRecord::from_json_line(line).unwrap().to_json_line());
        count += 1;
    }
    assert!(count > 0, "expected at least one record, got {text:?}");
}

#[test]
fn beta_json_single_value() {
    let out = run(&["beta", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let line = text.lines().next().expect("one line");
    let record = MachineRecord::from_json_line(line).expect("parseable record");
    assert!(record.pass);
    assert_eq!(record.s, 3);
}
