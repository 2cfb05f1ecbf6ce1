//! Quadrature: double-exponential (tanh-sinh) for endpoint singularities
//! and composite Simpson for smooth sampled data.
//!
//! The tanh-sinh substitution `x = mid + hw * tanh((pi/2) sinh t)` pushes
//! the endpoints to `t = +/- infinity`, so integrable endpoint
//! singularities converge at machine speed. Because `x` itself rounds to
//! the endpoint long before the node weights become negligible, the
//! integrand receives its distances to both endpoints as separate exact
//! arguments; singular factors like `(b - x)^(-1/p)` must be computed
//! from those offsets, never from `x`.

use crate::config::NumericsConfig;
use crate::error::{domain, no_convergence, Result};

use std::f64::consts::FRAC_PI_2;

const T_MAX: f64 = 6.0;
const MAX_LEVELS: u32 = 10;

/// Integrates `f` over `[a, b]` by tanh-sinh quadrature.
pub fn tanh_sinh<F>(mut f: F, a: f64, b: f64, cfg: &NumericsConfig) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    tanh_sinh_offsets(|x, _, _| f(x), a, b, cfg)
}

/// Tanh-sinh quadrature with endpoint offsets.
///
/// The integrand is called as `f(x, from_a, from_b)` where `from_a` and
/// `from_b` are the distances to the two endpoints, computed before `x`
/// is rounded, so they stay meaningful down to about `1e-280`.
pub fn tanh_sinh_offsets<F>(mut f: F, a: f64, b: f64, cfg: &NumericsConfig) -> Result<f64>
where
    F: FnMut(f64, f64, f64) -> Result<f64>,
{
    if !a.is_finite() || !b.is_finite() || a > b {
        return Err(domain(format!("bad integration interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(0.0);
    }
    let hw = 0.5 * (b - a);
    let mid = 0.5 * (a + b);

    let mut contrib = |t: f64| -> Result<f64> {
        if t == 0.0 {
            return Ok(FRAC_PI_2 * f(mid, hw, hw)?);
        }
        let u = FRAC_PI_2 * t.abs().sinh();
        let em = (-2.0 * u).exp();
        let opp = 1.0 + em;
        let w = FRAC_PI_2 * t.abs().cosh() * 4.0 * em / (opp * opp);
        let near = hw * 2.0 * em / opp; // hw * (1 - |tanh u|)
        let far = hw * 2.0 / opp; //       hw * (1 + |tanh u|)
        let v = if t > 0.0 {
            f(b - near, far, near)?
        } else {
            f(a + near, near, far)?
        };
        if !v.is_finite() {
            return Err(no_convergence(format!(
                "integrand not finite near t = {t} (x offset {near:.3e})"
            )));
        }
        Ok(w * v)
    };

    let points = cfg.quad_points.max(3);
    let steps = ((points - 1) / 2).max(1);
    let mut h = T_MAX / steps as f64;

    let mut sum = contrib(0.0)?;
    for j in 1..=steps {
        let t = j as f64 * h;
        sum += contrib(t)? + contrib(-t)?;
    }
    let mut estimate = h * hw * sum;

    for _ in 0..MAX_LEVELS {
        h *= 0.5;
        let mut j = 1usize;
        while (j as f64) * h <= T_MAX + 0.5 * h {
            let t = j as f64 * h;
            sum += contrib(t)? + contrib(-t)?;
            j += 2;
        }
        let refined = h * hw * sum;
        let delta = (refined - estimate).abs();
        estimate = refined;
        if delta <= cfg.abs_tol.max(cfg.rel_tol * estimate.abs()) {
            return Ok(estimate);
        }
    }
    Err(no_convergence(format!(
        "tanh-sinh failed to settle on [{a}, {b}] after {MAX_LEVELS} refinements"
    )))
}

/// Composite Simpson rule with `n` panels (`n` even, `n >= 2`).
pub fn simpson<F>(mut f: F, a: f64, b: f64, n: usize) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if n < 2 || !n.is_multiple_of(2) {
        return Err(domain(format!("Simpson needs an even panel count >= 2, got {n}")));
    }
    let h = (b - a) / n as f64;
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        values.push(f(a + i as f64 * h)?);
    }
    simpson_values(&values, h)
}

/// Composite Simpson rule over pre-sampled values on a uniform grid with
/// step `h`; the slice length must be odd (an even panel count).
pub fn simpson_values(values: &[f64], h: f64) -> Result<f64> {
    if values.len() < 3 || values.len().is_multiple_of(2) {
        return Err(domain(format!(
            "Simpson needs an odd number of samples >= 3, got {}",
            values.len()
        )));
    }
    let n = values.len() - 1;
    let mut acc = values[0] + values[n];
    for (i, v) in values.iter().enumerate().take(n).skip(1) {
        acc += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    Ok(acc * h / 3.0)
}
