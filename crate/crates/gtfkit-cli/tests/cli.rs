//! End-to-end tests of the `gtfkit` binary: output contracts, exit
//! codes, CSV determinism, and the JSON report schema.

// Frozen reference decimals keep their full oracle digits.
#![allow(clippy::excessive_precision)]

use std::path::PathBuf;
use std::process::{Command, Output};

use gtfkit::config::NumericsConfig;
use gtfkit::lyapunov::{best_constant, LyapunovInput, QNorm};
use gtfkit::verify::VerificationReport;

fn gtfkit(args: &[&str], envs: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtfkit"))
        .args(args)
        .envs(envs.iter().copied())
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn parsed_line(output: &Output) -> f64 {
    stdout_of(output).trim().parse().expect("one float line")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("gtfkit-cli-{}-{name}", std::process::id()))
}

#[test]
fn eval_matches_classical_values() {
    let out = gtfkit(&["eval", "pi", "--p", "2", "--q", "2"], &[]);
    assert!(out.status.success());
    assert!((parsed_line(&out) - std::f64::consts::PI).abs() <= 1e-11);

    let out = gtfkit(
        &["eval", "sin", "--p", "2", "--q", "2", "--x", "0.5235987755982988"],
        &[],
    );
    assert!((parsed_line(&out) - 0.5).abs() <= 1e-12);

    // Lemniscatic half period, pinned from an independent quadrature.
    let out = gtfkit(&["eval", "pi", "--p", "2", "--q", "4"], &[]);
    assert!((parsed_line(&out) - 2.622_057_554_292_119_810_465).abs() <= 1e-12);
}

#[test]
fn eval_covers_every_function() {
    for args in [
        vec!["eval", "cos", "--p", "3", "--q", "2", "--x", "0.4"],
        vec!["eval", "asin", "--p", "3", "--q", "2", "--x", "0.7"],
        vec!["eval", "phi", "--r", "1.5", "--H", "1", "--x", "0.3"],
        vec!["eval", "u", "--p", "3", "--q", "2", "--H", "1", "--x", "0.3"],
        vec!["eval", "weight", "--p", "2", "--q", "4", "--L", "1", "--x", "0.5"],
        vec!["eval", "2f1", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--x", "0.25"],
        vec!["eval", "beta", "--a", "0.5", "--b", "0.5"],
        vec!["eval", "ibeta", "--a", "0.5", "--b", "0.5", "--x", "0.3"],
    ] {
        let out = gtfkit(&args, &[]);
        assert!(out.status.success(), "failed: {args:?}");
        assert!(parsed_line(&out).is_finite(), "not a number: {args:?}");
    }
    // B(1/2, 1/2) = pi.
    let out = gtfkit(&["eval", "beta", "--a", "0.5", "--b", "0.5"], &[]);
    assert!((parsed_line(&out) - std::f64::consts::PI).abs() <= 1e-13);
}

#[test]
fn profile_shape_and_boundaries() {
    let out = gtfkit(&["profile", "nonlocal", "--r", "1.5", "--H", "1", "--n", "4"], &[]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "x,phi");
    let row = |line: &str| -> (f64, f64) {
        let (x, v) = line.split_once(',').expect("two fields");
        (x.parse().expect("x"), v.parse().expect("value"))
    };
    assert_eq!(row(lines[1]), (0.0, 0.0));
    let (x_last, v_last) = row(lines[5]);
    assert_eq!(x_last, 1.0);
    assert_eq!(v_last, 0.0);
    for line in &lines[2..5] {
        assert!(row(line).1 > 0.0);
    }
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn profile_general_argmax_left_of_midpoint() {
    let out = gtfkit(
        &["profile", "general", "--p", "3", "--q", "2", "--H", "1", "--n", "100"],
        &[],
    );
    assert!(out.status.success());
    let text = stdout_of(&out);
    let values: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|line| line.split_once(',').expect("two fields").1.parse().expect("value"))
        .collect();
    assert_eq!(values.len(), 101);
    let argmax = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).expect("finite"))
        .expect("nonempty")
        .0;
    assert!(argmax < 50, "argmax at {argmax}");
}

#[test]
fn profile_is_deterministic_and_out_file_matches_stdout() {
    let args = ["profile", "nonlocal", "--r", "1.2", "--H", "2", "--n", "37"];
    let first = gtfkit(&args, &[]);
    let second = gtfkit(&args, &[]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let path = temp_path("profile.csv");
    let path_str = path.to_str().expect("utf-8 temp path");
    let mut with_out: Vec<&str> = args.to_vec();
    with_out.extend_from_slice(&["--out", path_str]);
    let third = gtfkit(&with_out, &[]);
    assert!(third.status.success());
    assert!(third.stdout.is_empty());
    let written = std::fs::read(&path).expect("file written");
    assert_eq!(written, first.stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_json_round_trips_and_passes() {
    let out = gtfkit(&["verify", "hyper", "--seed", "9", "--format", "json"], &[]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let report: VerificationReport = serde_json::from_str(&text).expect("valid report json");
    assert_eq!(report.suite, "hyper");
    assert_eq!(report.seed, 9);
    assert!(report.all_passed());
    assert_eq!(report.summary.pass, report.checks.len());
    let again: VerificationReport =
        serde_json::from_str(&serde_json::to_string(&report).expect("encodes"))
            .expect("round trips");
    assert_eq!(again, report);

    // Same seed, same bytes; different seed, different records.
    let repeat = gtfkit(&["verify", "hyper", "--seed", "9", "--format", "json"], &[]);
    assert_eq!(repeat.stdout, out.stdout);
    let other = gtfkit(&["verify", "hyper", "--seed", "10", "--format", "json"], &[]);
    let other_report: VerificationReport =
        serde_json::from_str(&stdout_of(&other)).expect("valid report json");
    assert_ne!(other_report.checks, report.checks);
}

#[test]
fn verify_text_report_lists_every_group() {
    let out = gtfkit(&["verify", "hyper", "--seed", "3", "--sequential"], &[]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("suite hyper (seed 3):"));
    for name in [
        "asin_representation",
        "asin_representation_shifted",
        "integral_cos_power",
        "integral_sin_power",
        "integral_sum_rule",
        "hypergeometric_derivative_link",
    ] {
        assert!(text.contains(name), "missing group {name}");
    }
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // Domain error from the library: 2.
    let out = gtfkit(&["eval", "pi", "--p", "0.5", "--q", "2"], &[]);
    assert_eq!(out.status.code(), Some(2));
    // Nonlocal exponent restricted to (1, 2): 2.
    let out = gtfkit(&["eval", "phi", "--r", "2.5", "--H", "1", "--x", "0.3"], &[]);
    assert_eq!(out.status.code(), Some(2));
    // Missing required flag (argument parsing): 2.
    let out = gtfkit(&["eval", "pi", "--p", "2"], &[]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown suite or format: 2.
    let out = gtfkit(&["verify", "spectral"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = gtfkit(&["verify", "hyper", "--format", "yaml"], &[]);
    assert_eq!(out.status.code(), Some(2));
    // Bad environment override: 2.
    let out = gtfkit(&["eval", "pi", "--p", "2", "--q", "2"], &[("GTFKIT_ABS_TOL", "loose")]);
    assert_eq!(out.status.code(), Some(2));
    // Starved iteration budget: 3.
    let out = gtfkit(
        &["eval", "asin", "--p", "3", "--q", "2", "--x", "0.9"],
        &[("GTFKIT_MAX_ITER", "1")],
    );
    assert_eq!(out.status.code(), Some(3));
    // Verify with failing checks (evaluations broken by the budget): 1.
    let out = gtfkit(
        &["verify", "hyper", "--seed", "4"],
        &[("GTFKIT_MAX_ITER", "1")],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("FAIL"));
    // Bad n for profile: 2.
    let out = gtfkit(&["profile", "nonlocal", "--r", "1.5", "--H", "1", "--n", "1"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lyapunov_output_matches_the_library() {
    let out = gtfkit(&["lyapunov", "--p", "3", "--q", "2", "--L", "1"], &[]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let m_line = text.lines().next().expect("first line");
    let printed: f64 = m_line
        .strip_prefix("m_q = ")
        .expect("m_q line")
        .parse()
        .expect("float");
    let cfg = NumericsConfig::default();
    let input = LyapunovInput::new(3.0, QNorm::Finite(2.0), 1.0).expect("valid input");
    let expected = best_constant(&input, &cfg).expect("computes").best_constant;
    assert_eq!(printed, expected);
    assert!(text.contains("pi_inner = "));
    assert!(text.contains("weight = "));

    let out = gtfkit(
        &["lyapunov", "--p", "2", "--q", "inf", "--L", "3.141592653589793"],
        &[],
    );
    let text = stdout_of(&out);
    let printed: f64 = text
        .lines()
        .next()
        .expect("first line")
        .strip_prefix("m_q = ")
        .expect("m_q line")
        .parse()
        .expect("float");
    assert!((printed - 1.0).abs() <= 1e-12);
    assert!(text.contains("(constant)"));
}

#[test]
fn environment_overrides_reach_the_numerics() {
    // A loose stopping ratio truncates the series early, shifting the
    // printed digits without changing the leading ones.
    let args = ["eval", "2f1", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--x", "0.9"];
    let coarse = gtfkit(&args, &[("GTFKIT_REL_TOL", "1e-2")]);
    assert!(coarse.status.success());
    let fine = gtfkit(&args, &[]);
    let gap = (parsed_line(&coarse) - parsed_line(&fine)).abs();
    assert!(gap > 1e-6, "override had no effect");
    assert!(gap < 1e-1, "coarse result drifted too far");
}
