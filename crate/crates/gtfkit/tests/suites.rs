//! Full runs of the verification suites at the default settings: every
//! check must pass, and a report must be a pure function of suite and
//! seed regardless of how the sweeps were scheduled.

use gtfkit::config::NumericsConfig;
use gtfkit::exec::ExecMode;
use gtfkit::verify::{run, run_with_mode, Suite};

fn assert_clean(suite: Suite) {
    let cfg = NumericsConfig::default();
    let report = run(suite, 42, &cfg);
    let failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| {
            format!(
                "{} {:?}: lhs={:.6e} rhs={:.6e} residual={:.3e} tol={:.3e}",
                c.name, c.inputs, c.lhs, c.rhs, c.residual, c.tolerance
            )
        })
        .collect();
    assert!(
        failures.is_empty(),
        "{} of {} checks failed in suite {}:\n{}",
        failures.len(),
        report.checks.len(),
        suite,
        failures.join("\n")
    );
    assert_eq!(report.summary.pass, report.checks.len());
    assert!(report.all_passed());
}

#[test]
fn gtf_suite_is_clean() {
    assert_clean(Suite::Gtf);
}

#[test]
fn bvp_suite_is_clean() {
    assert_clean(Suite::Bvp);
}

#[test]
fn hyper_suite_is_clean() {
    assert_clean(Suite::Hyper);
}

#[test]
fn lyapunov_suite_is_clean() {
    assert_clean(Suite::Lyapunov);
}

#[test]
fn reports_are_deterministic_across_runs_and_modes() {
    let cfg = NumericsConfig::default();
    let first = run_with_mode(Suite::Hyper, 7, &cfg, ExecMode::default());
    let second = run_with_mode(Suite::Hyper, 7, &cfg, ExecMode::default());
    assert_eq!(first, second);
    let sequential = run_with_mode(Suite::Hyper, 7, &cfg, ExecMode::Sequential);
    assert_eq!(first.checks, sequential.checks);
    let other_seed = run_with_mode(Suite::Hyper, 8, &cfg, ExecMode::Sequential);
    assert_ne!(first.checks, other_seed.checks);
}

#[test]
fn all_concatenates_the_themed_suites() {
    let cfg = NumericsConfig::default();
    let all = run(Suite::All, 11, &cfg);
    let mut stitched = Vec::new();
    for suite in [Suite::Gtf, Suite::Bvp, Suite::Hyper, Suite::Lyapunov] {
        stitched.extend(run(suite, 11, &cfg).checks);
    }
    assert_eq!(all.checks, stitched);
    assert_eq!(all.summary.pass + all.summary.fail, all.checks.len());
}
