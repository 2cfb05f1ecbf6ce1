//! The generalized sine and cosine with two parameters.
//!
//! For `p, q > 1`,
//!
//! ```text
//! asin_pq(x) = INT_0^x (1 - t^q)^(-1/p) dt
//!            = (1/q) B_{x^q}(1/q, 1/p*),          p* = p / (p - 1),
//! pi_pq      = 2 asin_pq(1) = (2/q) B(1/q, 1/p*),
//! ```
//!
//! and `sin_pq` inverts `asin_pq` on `[0, pi_pq/2]`, extended to
//! `[0, pi_pq]` by reflection around the quarter period. The derivative
//! `cos_pq = (sin_pq)'` satisfies `cos_pq^p + sin_pq^q = 1` on the first
//! quarter period and continues with negative sign on the second.
//!
//! Inversion runs through the regularized incomplete beta: with
//! `y = 2t/pi_pq`, the root `z` of `I_z(1/q, 1/p*) = y` gives
//! `sin = z^(1/q)` and `cos = (1-z)^(1/p)`, where both `z` and `1-z`
//! come out of the solver at full relative accuracy. When `t^q` is below
//! `1e-8` the two-term series `sin ~ t - t^(q+1)/(p(q+1))` is used
//! instead; that keeps tiny arguments exact and, for large `q`, covers
//! the long flat stretch where `z = sin^q` would underflow.

use crate::config::NumericsConfig;
use crate::error::{domain, Result};
use crate::special::{beta_fn, reg_inc_beta, reg_inc_beta_inv_pair, BetaArgs, InvSeed};

/// Exponent pair `(p, q)`, both in `(1, infinity)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    p: f64,
    q: f64,
}

impl ParamPair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        // Conjugates blow up as either exponent approaches 1, so leave a
        // small moat around the boundary instead of admitting 1 + eps.
        const EDGE: f64 = 1.0 + 1e-9;
        if !p.is_finite() || p <= EDGE || !q.is_finite() || q <= EDGE {
            return Err(domain(format!(
                "exponents must be finite and greater than 1, got ({p}, {q})"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Hoelder conjugate of `p`.
    pub fn p_star(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    /// Hoelder conjugate of `q`.
    pub fn q_star(&self) -> f64 {
        self.q / (self.q - 1.0)
    }

    fn beta_args(&self) -> BetaArgs {
        // Both entries are in (0, 1), so construction cannot fail.
        BetaArgs::new(1.0 / self.q, 1.0 - 1.0 / self.p).unwrap()
    }
}

/// One evaluation of the pair `(sin_pq, cos_pq)` at an argument `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GtfPoint {
    pub t: f64,
    pub sin: f64,
    pub cos: f64,
}

/// Generalized half-period `pi_pq = (2/q) B(1/q, 1/p*)`.
pub fn pi_pq(pair: ParamPair, _cfg: &NumericsConfig) -> Result<f64> {
    Ok(2.0 / pair.q * beta_fn(pair.beta_args())?)
}

/// Generalized arcsine on `[0, 1]`.
pub fn asin_pq(x: f64, pair: ParamPair, cfg: &NumericsConfig) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain(format!("asin needs x in [0, 1], got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let (p, q) = (pair.p, pair.q);
    if q * x.ln() <= SERIES_LN_CUT {
        // INT_0^x (1-t^q)^(-1/p) dt = x + x^(q+1)/(p(q+1)) + O(x^(2q+1))
        return Ok(x + x.powf(q + 1.0) / (p * (q + 1.0)));
    }
    let args = pair.beta_args();
    Ok(reg_inc_beta(x.powf(q), args, cfg)? * beta_fn(args)? / q)
}

/// Generalized sine on `[0, pi_pq]`.
pub fn sin_pq(t: f64, pair: ParamPair, cfg: &NumericsConfig) -> Result<f64> {
    Ok(sin_cos_pq(t, pair, cfg)?.sin)
}

/// Generalized cosine (the derivative of `sin_pq`) on `[0, pi_pq]`;
/// negative past the quarter period.
pub fn cos_pq(t: f64, pair: ParamPair, cfg: &NumericsConfig) -> Result<f64> {
    Ok(sin_cos_pq(t, pair, cfg)?.cos)
}

/// Evaluates sine and cosine together on `[0, pi_pq]`.
pub fn sin_cos_pq(t: f64, pair: ParamPair, cfg: &NumericsConfig) -> Result<GtfPoint> {
    let half = 0.5 * pi_pq(pair, cfg)?;
    let (tf, sign) = fold(t, half)?;
    let (sin, cos) = eval_quarter(tf, pair, half, &mut InvSeed::default(), cfg)?;
    Ok(GtfPoint { t, sin, cos: sign * cos })
}

/// Samples `(sin_pq, cos_pq)` on `n + 1` uniform points of `[t0, t1]`,
/// a subinterval of `[0, pi_pq]`.
///
/// Functionally identical to calling [`sin_cos_pq`] in a loop, but each
/// root-find is seeded with the previous node's solution, which skips
/// the bracketing phase and makes dense profile grids cheap.
pub fn gtf_grid(
    pair: ParamPair,
    t0: f64,
    t1: f64,
    n: usize,
    cfg: &NumericsConfig,
) -> Result<Vec<GtfPoint>> {
    if n == 0 || !t0.is_finite() || !t1.is_finite() || t0 > t1 {
        return Err(domain(format!("bad grid request [{t0}, {t1}] with n = {n}")));
    }
    let half = 0.5 * pi_pq(pair, cfg)?;
    let step = (t1 - t0) / n as f64;
    let mut seed = InvSeed::default();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = if i == n { t1 } else { t0 + i as f64 * step };
        let (tf, sign) = fold(t, half)?;
        let (sin, cos) = eval_quarter(tf, pair, half, &mut seed, cfg)?;
        out.push(GtfPoint { t, sin, cos: sign * cos });
    }
    Ok(out)
}

/// Point evaluator that keeps root-find state between calls.
///
/// Quadrature drivers visit their nodes in an order of their own; a cold
/// `sin_cos_pq` call at every node would redo the bracketing phase of
/// the inverse each time. This caches the last inverse solution as a
/// seed, which drops repeated evaluations straight into the Newton
/// polish. One instance serves one integral and is not shared across
/// threads.
pub(crate) struct QuarterSampler {
    pair: ParamPair,
    half: f64,
    seed: InvSeed,
}

impl QuarterSampler {
    pub(crate) fn new(pair: ParamPair, cfg: &NumericsConfig) -> Result<Self> {
        Ok(Self {
            pair,
            half: 0.5 * pi_pq(pair, cfg)?,
            seed: InvSeed::default(),
        })
    }

    /// Quarter period `pi_pq / 2` of the pair being sampled.
    pub(crate) fn half(&self) -> f64 {
        self.half
    }

    /// `(sin_pq t, cos_pq t)` for `t` in `[0, pi_pq]`.
    pub(crate) fn at(&mut self, t: f64, cfg: &NumericsConfig) -> Result<(f64, f64)> {
        let (tf, sign) = fold(t, self.half)?;
        let (sin, cos) = eval_quarter(tf, self.pair, self.half, &mut self.seed, cfg)?;
        Ok((sin, sign * cos))
    }
}

/// Gap in the multiple-angle relation connecting the `(2, r)` and
/// `(r*, r)` families,
///
/// ```text
/// sin_{2,r}(2^(2/r) x) = 2^(2/r) sin_{r*,r}(x) cos_{r*,r}(x)^(r*-1),
/// ```
///
/// for `x` in `[0, pi_{r*,r}/2]`. Returns `|lhs - rhs|`.
pub fn multiple_angle_residual(r: f64, x: f64, cfg: &NumericsConfig) -> Result<f64> {
    if !r.is_finite() || r <= 1.0 {
        return Err(domain(format!("multiple-angle relation needs r > 1, got {r}")));
    }
    let r_star = r / (r - 1.0);
    let inner = ParamPair::new(r_star, r)?;
    let outer = ParamPair::new(2.0, r)?;
    // Past the quarter period the cosine flips sign and its fractional
    // power stops being real, so reject instead of returning NaN.
    let half = 0.5 * pi_pq(inner, cfg)?;
    if !(0.0..=half).contains(&x) {
        return Err(domain(format!(
            "multiple-angle argument must lie in [0, {half:.17}], got {x}"
        )));
    }
    let scale = 2.0_f64.powf(2.0 / r);
    let point = sin_cos_pq(x, inner, cfg)?;
    let rhs = scale * point.sin * point.cos.powf(r_star - 1.0);
    let lhs = sin_pq(scale * x, outer, cfg)?;
    Ok((lhs - rhs).abs())
}

// Series branch activates when t^q <= 1e-8; below, relative truncation
// error is O(t^(2q)) <= 1e-16.
const SERIES_LN_CUT: f64 = -8.0 * std::f64::consts::LN_10;

// Arguments may overshoot the period boundaries by a few ulp of rounding
// in the caller; clamp within this relative pad, reject beyond it.
const FOLD_PAD: f64 = 4e-12;

/// Reduces `t` in `[0, 2*half]` to the first quarter period, returning
/// the folded argument and the sign of the cosine.
fn fold(t: f64, half: f64) -> Result<(f64, f64)> {
    let full = 2.0 * half;
    let pad = FOLD_PAD * full;
    if !t.is_finite() || t < -pad || t > full + pad {
        return Err(domain(format!(
            "argument {t} outside [0, {full:.17}] (the half-period)"
        )));
    }
    let t = t.clamp(0.0, full);
    if t <= half {
        Ok((t, 1.0))
    } else {
        Ok((full - t, -1.0))
    }
}

/// Core evaluation on the first quarter period `[0, half]`.
fn eval_quarter(
    t: f64,
    pair: ParamPair,
    half: f64,
    seed: &mut InvSeed,
    cfg: &NumericsConfig,
) -> Result<(f64, f64)> {
    debug_assert!((0.0..=half).contains(&t));
    let (p, q) = (pair.p, pair.q);
    if t == 0.0 {
        return Ok((0.0, 1.0));
    }
    if t >= half {
        return Ok((1.0, 0.0));
    }
    if q * t.ln() <= SERIES_LN_CUT {
        let sin = t - t.powf(q + 1.0) / (p * (q + 1.0));
        let cos = ((-sin.powf(q)).ln_1p() / p).exp();
        return Ok((sin, cos));
    }
    let y = t / half;
    let (z, z_comp) = reg_inc_beta_inv_pair(y, pair.beta_args(), *seed, cfg)?;
    if z <= 0.5 {
        seed.lower = Some(z);
    } else {
        seed.upper = Some(z_comp);
    }
    Ok((z.powf(1.0 / q), z_comp.powf(1.0 / p)))
}

#[cfg(test)]
// Frozen reference decimals keep their full oracle digits.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn cfg() -> NumericsConfig {
        NumericsConfig::default()
    }

    fn pair(p: f64, q: f64) -> ParamPair {
        ParamPair::new(p, q).unwrap()
    }

    // 40-digit reference values, rounded.
    const PI_TABLE: [(f64, f64, f64); 6] = [
        (2.0, 2.0, std::f64::consts::PI),
        (2.0, 4.0, 2.622_057_554_292_119_810_465),
        (1.5, 1.5, 4.836_798_304_624_580_934_918),
        (1.1, 10.0, 4.145_176_294_977_288_696_241),
        (10.0, 1.1, 2.208_399_858_150_112_285_38),
        (4.0 / 3.0, 4.0, 3.708_149_354_602_744_186_381),
    ];

    #[test]
    fn half_period_matches_reference() {
        for (p, q, want) in PI_TABLE {
            let got = pi_pq(pair(p, q), &cfg()).unwrap();
            assert!(
                (got - want).abs() <= 1e-13 * want,
                "pi_({p},{q}): got {got}, want {want}"
            );
        }
    }

    #[test]
    fn sine_and_cosine_match_reference() {
        let pt = sin_cos_pq(0.7, pair(1.5, 3.0), &cfg()).unwrap();
        let (s, c) = (0.662_445_330_325_434_460_798_7, 0.795_338_331_412_163_234_500_7);
        assert!((pt.sin - s).abs() <= 1e-13 * s, "sin: {}", pt.sin);
        assert!((pt.cos - c).abs() <= 1e-13 * c, "cos: {}", pt.cos);

        let pt = sin_cos_pq(1.0, pair(2.5, 4.0), &cfg()).unwrap();
        let (s, c) = (0.920_512_055_097_248_884_49, 0.602_707_069_987_778_453_55);
        assert!((pt.sin - s).abs() <= 1e-13 * s);
        assert!((pt.cos - c).abs() <= 1e-13 * c);
    }

    #[test]
    fn classical_case_degenerates() {
        let pp = pair(2.0, 2.0);
        for i in 0..=100 {
            let t = std::f64::consts::PI * i as f64 / 100.0;
            let pt = sin_cos_pq(t, pp, &cfg()).unwrap();
            assert!((pt.sin - t.sin()).abs() <= 1e-12, "t={t}: {} vs {}", pt.sin, t.sin());
            assert!((pt.cos - t.cos()).abs() <= 1e-12, "t={t}: {} vs {}", pt.cos, t.cos());
        }
        let got = asin_pq(0.5, pp, &cfg()).unwrap();
        assert!((got - std::f64::consts::FRAC_PI_6).abs() <= 1e-14);
    }

    #[test]
    fn endpoints_are_exact() {
        let pp = pair(1.7, 2.9);
        let pi = pi_pq(pp, &cfg()).unwrap();
        let at = |t: f64| sin_cos_pq(t, pp, &cfg()).unwrap();
        assert_eq!((at(0.0).sin, at(0.0).cos), (0.0, 1.0));
        assert_eq!((at(0.5 * pi).sin, at(0.5 * pi).cos), (1.0, 0.0));
        assert_eq!((at(pi).sin, at(pi).cos), (0.0, -1.0));
        assert_eq!(asin_pq(0.0, pp, &cfg()).unwrap(), 0.0);
        let full = asin_pq(1.0, pp, &cfg()).unwrap();
        assert!((full - 0.5 * pi).abs() <= 1e-14 * pi);
    }

    #[test]
    fn pythagorean_identity() {
        for (p, q) in [(1.2, 5.0), (3.0, 1.4), (2.0, 2.0), (7.0, 7.0)] {
            let pp = pair(p, q);
            let pi = pi_pq(pp, &cfg()).unwrap();
            for i in 1..40 {
                let t = pi * i as f64 / 40.0;
                let pt = sin_cos_pq(t, pp, &cfg()).unwrap();
                let gap = pt.cos.abs().powf(p) + pt.sin.powf(q) - 1.0;
                assert!(gap.abs() <= 1e-12, "p={p} q={q} t={t}: gap {gap:.3e}");
            }
        }
    }

    #[test]
    fn reflection_symmetry() {
        let pp = pair(2.6, 1.3);
        let pi = pi_pq(pp, &cfg()).unwrap();
        for i in 1..20 {
            let t = 0.5 * pi * i as f64 / 20.0;
            let a = sin_cos_pq(t, pp, &cfg()).unwrap();
            let b = sin_cos_pq(pi - t, pp, &cfg()).unwrap();
            assert!((a.sin - b.sin).abs() <= 1e-14);
            assert!((a.cos + b.cos).abs() <= 1e-14);
        }
    }

    #[test]
    fn arcsine_round_trip() {
        let pp = pair(1.8, 3.3);
        let half = 0.5 * pi_pq(pp, &cfg()).unwrap();
        for i in 1..30 {
            let x = i as f64 / 30.0;
            let t = asin_pq(x, pp, &cfg()).unwrap();
            assert!(t > 0.0 && t < half);
            let back = sin_pq(t, pp, &cfg()).unwrap();
            assert!((back - x).abs() <= 1e-12, "x={x}: back {back}");
        }
    }

    #[test]
    fn tiny_arguments_stay_exact() {
        let pp = pair(1.5, 2.5);
        for &t in &[1e-300, 1e-30, 1e-9] {
            let pt = sin_cos_pq(t, pp, &cfg()).unwrap();
            assert!((pt.sin - t).abs() <= 1e-15 * t, "t={t}");
            assert!(pt.cos <= 1.0 && pt.cos > 1.0 - 1e-12);
        }
        // The arcsine agrees on the same branch.
        let a = asin_pq(1e-12, pp, &cfg()).unwrap();
        assert!((a - 1e-12).abs() <= 1e-27);
    }

    #[test]
    fn series_handoff_is_seamless() {
        // For q = 200 the series branch covers t^q <= 1e-8, i.e.
        // t <= 0.912...; on both sides of the cut the evaluation must
        // agree with the defining integral (round trip through asin,
        // whose own branches flip at the same spot in x).
        let pp = pair(2.0, 200.0);
        let t_cut = (SERIES_LN_CUT / 200.0).exp();
        let mut values = Vec::new();
        for &t in &[t_cut * (1.0 - 1e-9), t_cut * (1.0 + 1e-9)] {
            let s = sin_pq(t, pp, &cfg()).unwrap();
            let back = asin_pq(s, pp, &cfg()).unwrap();
            assert!((back - t).abs() <= 1e-12 * t, "t={t}: back {back}");
            values.push(s);
        }
        // No jump beyond what the unit slope of the flat stretch allows.
        let gap = values[1] - values[0];
        assert!(gap > 0.0 && gap <= 3.0 * t_cut * 2e-9, "gap {gap:.3e}");
        // And the curve is monotone on the quarter period.
        let half = 0.5 * pi_pq(pp, &cfg()).unwrap();
        let grid = gtf_grid(pp, 0.0, half, 200, &cfg()).unwrap();
        for w in grid.windows(2) {
            assert!(w[1].sin >= w[0].sin);
        }
    }

    #[test]
    fn grid_matches_pointwise_evaluation() {
        let pp = pair(1.3, 4.2);
        let pi = pi_pq(pp, &cfg()).unwrap();
        let grid = gtf_grid(pp, 0.0, pi, 257, &cfg()).unwrap();
        assert_eq!(grid.len(), 258);
        for pt in grid.iter().step_by(17) {
            let direct = sin_cos_pq(pt.t, pp, &cfg()).unwrap();
            assert!((pt.sin - direct.sin).abs() <= 1e-14 * direct.sin.max(1e-3));
            assert!((pt.cos - direct.cos).abs() <= 1e-13);
        }
        assert_eq!(grid.last().unwrap().t, pi);
    }

    #[test]
    fn multiple_angle_relation_holds() {
        for &r in &[1.5, 2.0, 3.0, 4.5] {
            let inner = pair(r / (r - 1.0), r);
            let half = 0.5 * pi_pq(inner, &cfg()).unwrap();
            for i in 0..=16 {
                let x = half * i as f64 / 16.0;
                let gap = multiple_angle_residual(r, x, &cfg()).unwrap();
                assert!(gap <= 1e-11, "r={r} x={x}: gap {gap:.3e}");
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(ParamPair::new(1.0, 2.0).is_err());
        assert!(ParamPair::new(2.0, 0.9).is_err());
        assert!(ParamPair::new(f64::INFINITY, 2.0).is_err());
        let pp = pair(2.0, 2.0);
        assert!(asin_pq(1.5, pp, &cfg()).is_err());
        assert!(asin_pq(-0.1, pp, &cfg()).is_err());
        let pi = pi_pq(pp, &cfg()).unwrap();
        assert!(sin_pq(pi * 1.001, pp, &cfg()).is_err());
        assert!(sin_pq(-0.1, pp, &cfg()).is_err());
        // A few ulp of overshoot from caller arithmetic is tolerated.
        assert!(sin_pq(pi * (1.0 + 1e-13), pp, &cfg()).is_ok());
        assert!(gtf_grid(pp, 0.0, 1.0, 0, &cfg()).is_err());
    }

    #[test]
    fn conjugate_accessors() {
        let pp = pair(1.5, 3.0);
        assert!((pp.p_star() - 3.0).abs() <= 1e-15);
        assert!((pp.q_star() - 1.5).abs() <= 1e-15);
    }
}
