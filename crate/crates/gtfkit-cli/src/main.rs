//! Command-line front end for the gtfkit library.
//!
//! Four subcommands cover the library surface:
//!
//! * `eval`: one function value, printed at full round-trip precision.
//! * `profile`: a boundary-value solution tabulated as CSV, suitable
//!   for external plotting; byte-identical output for fixed arguments.
//! * `verify`: the seeded verification suites, as a text summary or a
//!   JSON report.
//! * `lyapunov`: the best constant of the Lyapunov-type inequality
//!   together with its inner half period and extremal weight.
//!
//! Exit codes: 0 on success (and an all-pass verify run), 1 when a
//! verify run has failing checks, 2 on bad arguments or domain errors,
//! 3 when an iterative scheme does not converge. Numeric tolerances
//! can be overridden through `GTFKIT_*` environment variables.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use gtfkit::bvp::{GeneralProblem, NonlocalProblem};
use gtfkit::exec::ExecMode;
use gtfkit::gtf::{asin_pq, cos_pq, pi_pq, sin_pq, ParamPair};
use gtfkit::lyapunov::{best_constant, extremal_weight, LyapunovInput, QNorm};
use gtfkit::special::{beta_fn, gauss_2f1, reg_inc_beta, BetaArgs, HypArgs};
use gtfkit::verify::{run_with_mode, Suite, VerificationReport};
use gtfkit::{Error, NumericsConfig};

#[derive(Parser)]
#[command(
    name = "gtfkit",
    version,
    about = "Generalized trigonometric functions with two parameters",
    propagate_version = true
)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single function value.
    Eval {
        #[command(subcommand)]
        function: EvalFn,
    },
    /// Tabulate a boundary-value solution as CSV (header `x,phi`,
    /// n + 1 rows on a uniform grid over [0, H]).
    Profile {
        #[command(subcommand)]
        problem: ProfileKind,
    },
    /// Run verification suites and report per-check residuals.
    Verify {
        /// Which suite to run: all, gtf, bvp, hyper, or lyapunov.
        #[arg(default_value = "all")]
        suite: String,
        /// Seed for the randomized sweeps.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
        /// Schedule the sweeps on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// Print the Lyapunov best constant and its extremal weight.
    Lyapunov {
        #[arg(long)]
        p: f64,
        /// Norm exponent in (1, inf), or the literal `inf`.
        #[arg(long)]
        q: String,
        /// Interval length.
        #[arg(long = "L")]
        length: f64,
    },
}

#[derive(Subcommand)]
enum EvalFn {
    /// Generalized sine at t.
    Sin {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        x: f64,
    },
    /// Generalized cosine at t (the sine's derivative).
    Cos {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        x: f64,
    },
    /// Inverse of the generalized sine on [0, 1].
    Asin {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        x: f64,
    },
    /// Generalized half period pi_{p,q}.
    Pi {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
    },
    /// Nonlocal boundary-value solution at x, r in (1, 2).
    Phi {
        #[arg(long)]
        r: f64,
        /// Interval length.
        #[arg(long = "H")]
        h: f64,
        #[arg(long)]
        x: f64,
    },
    /// Two-parameter boundary-value solution at x.
    U {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Interval length.
        #[arg(long = "H")]
        h: f64,
        #[arg(long)]
        x: f64,
    },
    /// Extremal Lyapunov weight at x.
    Weight {
        #[arg(long)]
        p: f64,
        /// Norm exponent in (1, inf), or the literal `inf`.
        #[arg(long)]
        q: String,
        /// Interval length.
        #[arg(long = "L")]
        length: f64,
        #[arg(long)]
        x: f64,
    },
    /// Gauss hypergeometric series F(a, b; c; x).
    #[command(name = "2f1")]
    Hyp2f1 {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        x: f64,
    },
    /// Complete beta function B(a, b).
    Beta {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
    /// Regularized incomplete beta function I_x(a, b).
    Ibeta {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        x: f64,
    },
}

#[derive(Subcommand)]
enum ProfileKind {
    /// Solution of the nonlocal problem, r in (1, 2).
    Nonlocal {
        #[arg(long)]
        r: f64,
        /// Interval length.
        #[arg(long = "H")]
        h: f64,
        /// Number of grid cells (rows = n + 1).
        #[arg(long)]
        n: usize,
    },
    /// Solution of the two-parameter problem.
    General {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Interval length.
        #[arg(long = "H")]
        h: f64,
        /// Number of grid cells (rows = n + 1).
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::NonConvergence(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode, Error> {
    let cfg = NumericsConfig::from_env()?;
    let mut out = String::new();
    let code = match cli.command {
        Command::Eval { function } => {
            let value = eval_value(function, &cfg)?;
            let _ = writeln!(out, "{value}");
            ExitCode::SUCCESS
        }
        Command::Profile { problem } => {
            profile_csv(problem, &cfg, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            seed,
            format,
            sequential,
        } => {
            let suite = Suite::from_str(&suite).map_err(Error::Domain)?;
            let mode = if sequential {
                ExecMode::Sequential
            } else {
                ExecMode::default()
            };
            let report = run_with_mode(suite, seed, &cfg, mode);
            match format.trim() {
                "text" => out.push_str(&render_text(&report)),
                "json" => {
                    let json = serde_json::to_string_pretty(&report)
                        .map_err(|e| Error::Domain(format!("cannot encode report: {e}")))?;
                    out.push_str(&json);
                    out.push('\n');
                }
                other => {
                    return Err(Error::Domain(format!(
                        "unknown format '{other}' (expected text or json)"
                    )))
                }
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Lyapunov { p, q, length } => {
            let input = LyapunovInput::new(p, parse_qnorm(&q)?, length)?;
            let result = best_constant(&input, &cfg)?;
            let _ = writeln!(out, "m_q = {}", result.best_constant);
            let _ = writeln!(out, "pi_inner = {}", result.pi_inner);
            if result.weight_exponent == 0.0 {
                let _ = writeln!(out, "weight = {} (constant)", result.weight_coefficient);
            } else {
                let _ = writeln!(
                    out,
                    "weight = {} * sin_{{{},{}}}(pi_inner * x / L)^{}",
                    result.weight_coefficient,
                    p,
                    input.solution_exponent(),
                    result.weight_exponent
                );
            }
            ExitCode::SUCCESS
        }
    };
    match cli.out {
        Some(path) => std::fs::write(&path, out)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{out}"),
    }
    Ok(code)
}

fn eval_value(function: EvalFn, cfg: &NumericsConfig) -> Result<f64, Error> {
    match function {
        EvalFn::Sin { p, q, x } => sin_pq(x, ParamPair::new(p, q)?, cfg),
        EvalFn::Cos { p, q, x } => cos_pq(x, ParamPair::new(p, q)?, cfg),
        EvalFn::Asin { p, q, x } => asin_pq(x, ParamPair::new(p, q)?, cfg),
        EvalFn::Pi { p, q } => pi_pq(ParamPair::new(p, q)?, cfg),
        EvalFn::Phi { r, h, x } => NonlocalProblem::new(r, h)?.value(x, cfg),
        EvalFn::U { p, q, h, x } => GeneralProblem::new(p, q, h)?.value(x, cfg),
        EvalFn::Weight { p, q, length, x } => {
            let input = LyapunovInput::new(p, parse_qnorm(&q)?, length)?;
            extremal_weight(x, &input, cfg)
        }
        EvalFn::Hyp2f1 { a, b, c, x } => gauss_2f1(HypArgs::new(a, b, c, x)?, cfg),
        EvalFn::Beta { a, b } => beta_fn(BetaArgs::new(a, b)?),
        EvalFn::Ibeta { a, b, x } => reg_inc_beta(x, BetaArgs::new(a, b)?, cfg),
    }
}

fn profile_csv(problem: ProfileKind, cfg: &NumericsConfig, out: &mut String) -> Result<(), Error> {
    let (h, n) = match &problem {
        ProfileKind::Nonlocal { h, n, .. } | ProfileKind::General { h, n, .. } => (*h, *n),
    };
    if n < 2 {
        return Err(Error::Domain(format!("profile needs n >= 2, got {n}")));
    }
    let value: Box<dyn Fn(f64) -> Result<f64, Error>> = match problem {
        ProfileKind::Nonlocal { r, h, .. } => {
            let prob = NonlocalProblem::new(r, h)?;
            Box::new(move |x| prob.value(x, cfg))
        }
        ProfileKind::General { p, q, h, .. } => {
            let prob = GeneralProblem::new(p, q, h)?;
            Box::new(move |x| prob.value(x, cfg))
        }
    };
    out.push_str("x,phi\n");
    for i in 0..=n {
        let x = h * i as f64 / n as f64;
        let _ = writeln!(out, "{:.16e},{:.16e}", x, value(x)?);
    }
    Ok(())
}

fn parse_qnorm(q: &str) -> Result<QNorm, Error> {
    let q = q.trim();
    if q.eq_ignore_ascii_case("inf") {
        return Ok(QNorm::Infinite);
    }
    let value: f64 = q
        .parse()
        .map_err(|_| Error::Domain(format!("q must be a number or 'inf', got {q:?}")))?;
    Ok(QNorm::Finite(value))
}

/// One line per check name: count, worst residual against its tolerance,
/// verdict; then full detail for every failing record.
fn render_text(report: &VerificationReport) -> String {
    struct Group<'a> {
        name: &'a str,
        count: usize,
        failed: usize,
        worst: f64,
        tol_at_worst: f64,
    }
    let mut groups: Vec<Group> = Vec::new();
    for check in &report.checks {
        let group = match groups.iter_mut().find(|g| g.name == check.name) {
            Some(g) => g,
            None => {
                groups.push(Group {
                    name: &check.name,
                    count: 0,
                    failed: 0,
                    worst: -1.0,
                    tol_at_worst: 0.0,
                });
                groups.last_mut().expect("just pushed")
            }
        };
        group.count += 1;
        if !check.pass {
            group.failed += 1;
        }
        if check.residual > group.worst {
            group.worst = check.residual;
            group.tol_at_worst = check.tolerance;
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite {} (seed {}): {} checks, {} passed, {} failed",
        report.suite,
        report.seed,
        report.checks.len(),
        report.summary.pass,
        report.summary.fail
    );
    let width = groups.iter().map(|g| g.name.len()).max().unwrap_or(0);
    for group in &groups {
        let _ = writeln!(
            out,
            "  {:width$}  {:4} checks  worst {:9.3e}  tol {:9.3e}  {}",
            group.name,
            group.count,
            group.worst,
            group.tol_at_worst,
            if group.failed == 0 { "PASS" } else { "FAIL" },
        );
    }
    if report.summary.fail > 0 {
        let _ = writeln!(out, "failed checks:");
        for check in report.checks.iter().filter(|c| !c.pass) {
            let inputs: Vec<String> = check
                .inputs
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(
                out,
                "  {} [{}]: lhs={:e} rhs={:e} residual={:e} tolerance={:e}",
                check.name,
                inputs.join(", "),
                check.lhs,
                check.rhs,
                check.residual,
                check.tolerance,
            );
        }
    }
    out
}
