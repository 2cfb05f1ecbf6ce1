//! Complete and incomplete beta functions and the inverse of the
//! regularized form.
//!
//! The regularized function uses the standard continued fraction
//! (modified Lentz), switching to the complementary expansion once
//! `x` passes the mean `a / (a + b)` so both tails converge fast.
//! The inverse runs a safeguarded Newton iteration inside a bisection
//! bracket and polishes until the step stalls at a few ulp, not merely
//! until the residual clears a tolerance: downstream code feeds these
//! roots into second differences, where any leftover noise would be
//! amplified by the inverse square of the grid step.

use crate::config::NumericsConfig;
use crate::error::{domain, no_convergence, Result};
use crate::special::gamma::ln_gamma;

/// Validated parameter pair `(a, b)` for the beta integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaArgs {
    a: f64,
    b: f64,
}

impl BetaArgs {
    /// Requires both exponents finite and strictly positive.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 || !b.is_finite() || b <= 0.0 {
            return Err(domain(format!("beta arguments must be positive, got ({a}, {b})")));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// The pair with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> Self {
        Self { a: self.b, b: self.a }
    }

    pub(crate) fn ln_beta(&self) -> f64 {
        // All three arguments are positive, so the unwraps cannot fire.
        ln_gamma(self.a).unwrap() + ln_gamma(self.b).unwrap() - ln_gamma(self.a + self.b).unwrap()
    }
}

/// Complete beta function.
pub(crate) fn beta(args: BetaArgs) -> Result<f64> {
    let value = args.ln_beta().exp();
    if !value.is_finite() {
        return Err(domain(format!(
            "beta({}, {}) overflows a double",
            args.a, args.b
        )));
    }
    Ok(value)
}

/// Lower incomplete beta `B_x(a, b) = INT_0^x t^(a-1) (1-t)^(b-1) dt`.
pub fn inc_beta_lower(x: f64, args: BetaArgs, cfg: &NumericsConfig) -> Result<f64> {
    Ok(reg_inc_beta(x, args, cfg)? * beta(args)?)
}

/// Regularized incomplete beta `I_x(a, b)`.
pub fn reg_inc_beta(x: f64, args: BetaArgs, cfg: &NumericsConfig) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain(format!("incomplete beta needs x in [0, 1], got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    let (a, b) = (args.a, args.b);
    let front = (a * x.ln() + b * (-x).ln_1p() - args.ln_beta()).exp();
    if x < a / (a + b) {
        Ok(front * beta_cf(a, b, x, cfg)? / a)
    } else {
        Ok(1.0 - front * beta_cf(b, a, 1.0 - x, cfg)? / b)
    }
}

/// Continued fraction for the incomplete beta, evaluated by the modified
/// Lentz scheme. Runs to machine precision regardless of the configured
/// tolerances; only the iteration budget is taken from `cfg`.
fn beta_cf(a: f64, b: f64, x: f64, cfg: &NumericsConfig) -> Result<f64> {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 3e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=cfg.max_iter {
        let m = m as f64;
        let m2 = 2.0 * m;
        let num = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + num * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + num / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let num = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + num * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + num / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() <= EPS {
            return Ok(h);
        }
    }
    Err(no_convergence(format!(
        "incomplete beta continued fraction stalled after {} iterations (a={a}, b={b}, x={x})",
        cfg.max_iter
    )))
}

/// Warm-start hints for [`reg_inc_beta_inv_pair`], one per branch.
///
/// Grid sweeps solve a slowly drifting sequence of targets; seeding the
/// Newton iteration with the previous root skips the bisection phase.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct InvSeed {
    /// Guess for the root itself (taken when the root sits below 1/2).
    pub lower: Option<f64>,
    /// Guess for the complementary root `1 - z` (root above 1/2).
    pub upper: Option<f64>,
}

/// Inverse of the regularized incomplete beta: the `z` with `I_z(a, b) = y`.
pub fn reg_inc_beta_inv(y: f64, args: BetaArgs, cfg: &NumericsConfig) -> Result<f64> {
    Ok(reg_inc_beta_inv_pair(y, args, InvSeed::default(), cfg)?.0)
}

/// Inverse returning both `z` and `1 - z`, each to full relative accuracy.
///
/// When the root lies past `1/2` the complementary equation
/// `I_w(b, a) = 1 - y` is solved directly in the variable `w = 1 - z`,
/// so callers that go on to take fractional powers of `1 - z` (the
/// cosine side of the kernels) do not lose the digits that a final
/// `1.0 - z` subtraction would destroy. The branch is picked by
/// comparing `y` against `I` at the midpoint, which keeps the solved
/// variable on the small side even for heavily skewed `(a, b)`.
pub(crate) fn reg_inc_beta_inv_pair(
    y: f64,
    args: BetaArgs,
    seed: InvSeed,
    cfg: &NumericsConfig,
) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&y) {
        return Err(domain(format!("inverse beta needs y in [0, 1], got {y}")));
    }
    if y == 0.0 {
        return Ok((0.0, 1.0));
    }
    if y == 1.0 {
        return Ok((1.0, 0.0));
    }
    if y == 0.5 && args.a == args.b {
        return Ok((0.5, 0.5));
    }
    if y <= reg_inc_beta(0.5, args, cfg)? {
        let z = inv_lower(y, args, seed.lower, cfg)?;
        Ok((z, 1.0 - z))
    } else {
        let w = inv_lower(1.0 - y, args.swapped(), seed.upper, cfg)?;
        Ok((1.0 - w, w))
    }
}

/// Solves `I_z(a, b) = y`; the caller arranges for the root to lie in
/// `(0, 1/2]`, where both the asymptotic seed and the Newton scaling
/// behave.
///
/// Cold start: bisection from `[0, 1]` down to a bracket of width `1e-4`,
/// then Newton seeded from the small-`z` asymptotic `z ~ (a B y)^(1/a)`
/// when that lands inside the bracket. Every function evaluation updates
/// the bracket and any Newton step that would leave it is replaced by a
/// bisection step, so the iteration cannot escape or cycle.
fn inv_lower(y: f64, args: BetaArgs, guess: Option<f64>, cfg: &NumericsConfig) -> Result<f64> {
    let (a, b) = (args.a, args.b);
    let ln_beta = args.ln_beta();

    // Far-left-tail shortcut. There I_z = z^a / (a B) up to a relative
    // O(z) correction, so once the root is small enough that the
    // correction cannot move it by an ulp, the asymptotic inverse is
    // the answer. Skipping the Newton loop also matters for accuracy:
    // with a tiny `a` the root can sink into the subnormal range, where
    // forward evaluations are too grainy for a residual test to pass.
    let ln_root = (y.ln() + a.ln() + ln_beta) / a;
    if ln_root < -41.5 {
        return Ok(ln_root.exp());
    }

    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;

    let mut z = match guess {
        Some(g) if g > 0.0 && g < 1.0 => g,
        _ => {
            while hi - lo > 1e-4 {
                let mid = 0.5 * (lo + hi);
                if reg_inc_beta(mid, args, cfg)? < y {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let asymptotic = ((y.ln() + a.ln() + ln_beta) / a).exp();
            if asymptotic > lo && asymptotic < hi {
                asymptotic
            } else {
                0.5 * (lo + hi)
            }
        }
    };

    let mut residual = f64::MAX;
    for _ in 0..cfg.max_iter {
        residual = reg_inc_beta(z, args, cfg)? - y;
        if residual == 0.0 {
            return Ok(z);
        }
        if residual < 0.0 {
            lo = z;
        } else {
            hi = z;
        }
        let ln_pdf = (a - 1.0) * z.ln() + (b - 1.0) * (-z).ln_1p() - ln_beta;
        let step = residual * (-ln_pdf).exp();
        let mut next = z - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        let moved = (next - z).abs();
        z = next;
        if moved <= 4.0 * f64::EPSILON * z.abs() {
            residual = reg_inc_beta(z, args, cfg)? - y;
            break;
        }
    }
    if residual.abs() <= cfg.abs_tol {
        Ok(z)
    } else {
        Err(no_convergence(format!(
            "inverse beta left a residual of {residual:.3e} at z={z} (a={a}, b={b}, y={y})"
        )))
    }
}
