//! Hypergeometric identities satisfied by the generalized arcsine, and
//! closed antiderivatives of sine and cosine powers.
//!
//! With `p* = p/(p-1)` and `t = x^(1/q)`, the generalized arcsine admits
//! two Gauss hypergeometric representations on `x in (0, 1)`:
//!
//! ```text
//! F(1/q, 1/p - 1; 1 + 1/q; x)
//!     = (q asin_pq(t) + p* t (1-x)^(1/p*)) / ((p* + q) t),
//! F(1 + 1/q, 1/p; 2 + 1/q; x)
//!     = p* (q+1) (asin_pq(t) - t (1-x)^(1/p*)) / ((p* + q) x t).
//! ```
//!
//! The second follows from the first by differentiation. Alongside them
//! sit the antiderivatives
//!
//! ```text
//! INT_0^x cos_pq^p du = (q x + p* sin_pq(x) cos_pq(x)^(p-1)) / (p* + q),
//! INT_0^x sin_pq^q du = p* (x - sin_pq(x) cos_pq(x)^(p-1)) / (p* + q),
//! ```
//!
//! whose sum telescopes to `x` because `cos^p + sin^q = 1`.
//!
//! Each check evaluates its two sides along disjoint code paths (the
//! hypergeometric series against the incomplete-beta inversion, or
//! tanh-sinh quadrature against the closed form) and reports the gap, so
//! a defect in either route shows up as a residual, not a silent
//! agreement.

use crate::config::NumericsConfig;
use crate::error::{domain, Result};
use crate::gtf::{asin_pq, ParamPair, QuarterSampler};
use crate::quad::tanh_sinh;
use crate::special::{gauss_2f1, HypArgs};

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Both sides of one identity at one input, with their absolute gap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    /// Which identity was evaluated.
    pub name: String,
    /// The numeric inputs, keyed by parameter name.
    pub inputs: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs - rhs|`.
    pub residual: f64,
}

impl IdentityCheck {
    fn new(name: &str, inputs: &[(&str, f64)], lhs: f64, rhs: f64) -> Self {
        Self {
            name: name.to_owned(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            lhs,
            rhs,
            residual: (lhs - rhs).abs(),
        }
    }
}

/// Checks `F(1/q, 1/p - 1; 1 + 1/q; x)` against its arcsine closed form
/// for `x` in `(0, 1)`.
///
/// The right side has a removable `0/0` at the origin (both sides tend
/// to 1), so `x = 0` is rejected rather than special-cased.
pub fn asin_representation(pair: ParamPair, x: f64, cfg: &NumericsConfig) -> Result<IdentityCheck> {
    check_open_unit(x)?;
    let (p, q) = (pair.p(), pair.q());
    let ps = pair.p_star();
    let lhs = gauss_2f1(HypArgs::new(1.0 / q, 1.0 / p - 1.0, 1.0 + 1.0 / q, x)?, cfg)?;
    let t = x.powf(1.0 / q);
    let rhs = (q * asin_pq(t, pair, cfg)? + ps * t * (1.0 - x).powf(1.0 / ps)) / ((ps + q) * t);
    Ok(IdentityCheck::new(
        "asin_representation",
        &[("p", p), ("q", q), ("x", x)],
        lhs,
        rhs,
    ))
}

/// Checks `F(1 + 1/q, 1/p; 2 + 1/q; x)` against its arcsine closed form
/// for `x` in `(0, 1)`.
///
/// This is the derivative of [`asin_representation`] with the leading
/// series term normalized back to 1 at the origin.
pub fn asin_representation_shifted(
    pair: ParamPair,
    x: f64,
    cfg: &NumericsConfig,
) -> Result<IdentityCheck> {
    check_open_unit(x)?;
    let (p, q) = (pair.p(), pair.q());
    let ps = pair.p_star();
    let lhs = gauss_2f1(HypArgs::new(1.0 + 1.0 / q, 1.0 / p, 2.0 + 1.0 / q, x)?, cfg)?;
    let t = x.powf(1.0 / q);
    let rhs = ps * (q + 1.0) * (asin_pq(t, pair, cfg)? - t * (1.0 - x).powf(1.0 / ps))
        / ((ps + q) * x * t);
    Ok(IdentityCheck::new(
        "asin_representation_shifted",
        &[("p", p), ("q", q), ("x", x)],
        lhs,
        rhs,
    ))
}

/// Checks `INT_0^x cos_pq^p` (tanh-sinh quadrature) against its closed
/// form for `x` in `[0, pi_pq/2]`.
pub fn integral_cos_power(pair: ParamPair, x: f64, cfg: &NumericsConfig) -> Result<IdentityCheck> {
    let (p, q) = (pair.p(), pair.q());
    let ps = pair.p_star();
    let mut sampler = QuarterSampler::new(pair, cfg)?;
    check_quarter_range(x, sampler.half())?;
    let lhs = tanh_sinh(|u| Ok(sampler.at(u, cfg)?.1.powf(p)), 0.0, x, cfg)?;
    let (s, c) = sampler.at(x, cfg)?;
    let rhs = (q * x + ps * s * c.powf(p - 1.0)) / (ps + q);
    Ok(IdentityCheck::new(
        "integral_cos_power",
        &[("p", p), ("q", q), ("x", x)],
        lhs,
        rhs,
    ))
}

/// Checks `INT_0^x sin_pq^q` (tanh-sinh quadrature) against its closed
/// form for `x` in `[0, pi_pq/2]`.
///
/// Together with [`integral_cos_power`] the closed forms satisfy the sum
/// rule `I + J = x` exactly, which the tests pin separately.
pub fn integral_sin_power(pair: ParamPair, x: f64, cfg: &NumericsConfig) -> Result<IdentityCheck> {
    let (p, q) = (pair.p(), pair.q());
    let ps = pair.p_star();
    let mut sampler = QuarterSampler::new(pair, cfg)?;
    check_quarter_range(x, sampler.half())?;
    let lhs = tanh_sinh(|u| Ok(sampler.at(u, cfg)?.0.powf(q)), 0.0, x, cfg)?;
    let (s, c) = sampler.at(x, cfg)?;
    let rhs = ps * (x - s * c.powf(p - 1.0)) / (ps + q);
    Ok(IdentityCheck::new(
        "integral_sin_power",
        &[("p", p), ("q", q), ("x", x)],
        lhs,
        rhs,
    ))
}

fn check_open_unit(x: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("identity argument must lie in (0, 1), got {x}")));
    }
    Ok(())
}

fn check_quarter_range(x: f64, half: f64) -> Result<()> {
    if !(0.0..=half).contains(&x) {
        return Err(domain(format!(
            "integral endpoint must lie in [0, {half:.17}], got {x}"
        )));
    }
    Ok(())
}
