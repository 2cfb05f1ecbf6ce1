//! Closed-form solutions of two nonlocal boundary-value problems on
//! `[0, H]` and the location of their maxima.
//!
//! The first problem couples a quadratic nonlinearity to a mean of the
//! squared slope,
//!
//! ```text
//! phi' - (phi')^2 + phi phi'' + (2/H) INT_0^H (phi')^2 dt = 0,
//! phi(0) = phi(H) = 0,
//! ```
//!
//! solved for `1 < r < 2` by
//! `phi(x) = 2H / ((2-r) pi_r) * sin_r(kx) cos_r(kx)^(r-1)` with
//! `k = pi_r / (2H)` and `sin_r = sin_{r,r}`. Its slope collapses to
//! `phi'(x) = (1 - r sin_r^r(kx)) / (2 - r)`, which is what the residual
//! integral uses.
//!
//! The second generalizes the exponents:
//!
//! ```text
//! (p - q) u' - pq (u')^2 + (p + q) u u'' + 1 = 0,   u(0) = u(H) = 0,
//! ```
//!
//! solved by `u(x) = 2H / (q pi_{p*,q}) * sin_{p*,q}(kx) cos_{p*,q}(kx)^(p*-1)`
//! with `k = pi_{p*,q} / (2H)`, slope `u' = 1/q - (1/p + 1/q) sin^q`.
//! Both solutions have a single interior maximum; whether it sits below,
//! at, or above the midpoint is decided by the ordering of the quarter
//! period value `sin_pq(pi_pq/4)` against `(p*/(p*+q))^(1/q)`, exposed
//! here as [`median_trichotomy`].

use crate::config::NumericsConfig;
use crate::error::{domain, Result};
use crate::gtf::{asin_pq, gtf_grid, pi_pq, sin_cos_pq, sin_pq, ParamPair};
use crate::quad::simpson_values;

use std::cmp::Ordering;

/// Where an interior extremum sits relative to the midpoint of `[0, H]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MidpointRelation {
    Below,
    AtMidpoint,
    Above,
}

/// Location and value of the unique interior maximum of a solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumReport {
    pub location: f64,
    pub value: f64,
    pub midpoint_relation: MidpointRelation,
}

// An extremum within this relative distance of H/2 counts as central.
const MIDPOINT_TOL: f64 = 1e-9;

fn classify(location: f64, length: f64) -> MidpointRelation {
    let mid = 0.5 * length;
    if (location - mid).abs() <= MIDPOINT_TOL * length {
        MidpointRelation::AtMidpoint
    } else if location < mid {
        MidpointRelation::Below
    } else {
        MidpointRelation::Above
    }
}

fn check_position(x: f64, length: f64) -> Result<f64> {
    if !x.is_finite() || x < -1e-12 * length || x > length * (1.0 + 1e-12) {
        return Err(domain(format!("position {x} outside [0, {length}]")));
    }
    Ok(x.clamp(0.0, length))
}

fn check_grid_n(n: usize) -> Result<()> {
    if n < 10 || !n.is_multiple_of(2) {
        return Err(domain(format!("residual grid needs an even n >= 10, got {n}")));
    }
    Ok(())
}

/// The mean-coupled problem with exponent `r` in `(1, 2)` on `[0, H]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonlocalProblem {
    r: f64,
    length: f64,
}

impl NonlocalProblem {
    pub fn new(r: f64, length: f64) -> Result<Self> {
        if !r.is_finite() || r <= 1.0 || r >= 2.0 {
            return Err(domain(format!("exponent must satisfy 1 < r < 2, got {r}")));
        }
        if !length.is_finite() || length <= 0.0 {
            return Err(domain(format!("domain length must be positive, got {length}")));
        }
        Ok(Self { r, length })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    fn pair(&self) -> ParamPair {
        ParamPair::new(self.r, self.r).unwrap()
    }

    /// Solution value `phi(x)`.
    pub fn value(&self, x: f64, cfg: &NumericsConfig) -> Result<f64> {
        let x = check_position(x, self.length)?;
        let pair = self.pair();
        let pi = pi_pq(pair, cfg)?;
        let t = pi / (2.0 * self.length) * x;
        let pt = sin_cos_pq(t, pair, cfg)?;
        let amp = 2.0 * self.length / ((2.0 - self.r) * pi);
        Ok(amp * pt.sin * pt.cos.powf(self.r - 1.0))
    }

    /// Closed-form slope `phi'(x) = (1 - r sin_r^r(kx)) / (2 - r)`.
    pub fn derivative(&self, x: f64, cfg: &NumericsConfig) -> Result<f64> {
        let x = check_position(x, self.length)?;
        let pair = self.pair();
        let pi = pi_pq(pair, cfg)?;
        let t = pi / (2.0 * self.length) * x;
        let s = sin_pq(t, pair, cfg)?;
        Ok((1.0 - self.r * s.powf(self.r)) / (2.0 - self.r))
    }

    /// Worst defect of the differential equation over the interior
    /// window `[0.05 H, 0.95 H]`, sampled on an `n`-panel grid.
    ///
    /// Second derivatives come from central differences of the sampled
    /// solution; the nonlocal term integrates the closed-form slope
    /// squared by Simpson's rule. The result decays like the grid step
    /// squared for a genuine solution.
    pub fn residual(&self, n: usize, cfg: &NumericsConfig) -> Result<f64> {
        check_grid_n(n)?;
        let pair = self.pair();
        let pi = pi_pq(pair, cfg)?;
        let amp = 2.0 * self.length / ((2.0 - self.r) * pi);
        let grid = gtf_grid(pair, 0.0, 0.5 * pi, n, cfg)?;
        let phi: Vec<f64> = grid
            .iter()
            .map(|pt| amp * pt.sin * pt.cos.powf(self.r - 1.0))
            .collect();
        let slope_sq: Vec<f64> = grid
            .iter()
            .map(|pt| {
                let d = (1.0 - self.r * pt.sin.powf(self.r)) / (2.0 - self.r);
                d * d
            })
            .collect();
        let h = self.length / n as f64;
        let nonlocal = 2.0 / self.length * simpson_values(&slope_sq, h)?;

        let (lo, hi) = (0.05 * self.length, 0.95 * self.length);
        let mut worst = 0.0_f64;
        for i in 1..n {
            let x = i as f64 * h;
            if x < lo - 1e-12 || x > hi + 1e-12 {
                continue;
            }
            let d1 = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
            let d2 = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h);
            let res = d1 - d1 * d1 + phi[i] * d2 + nonlocal;
            worst = worst.max(res.abs());
        }
        Ok(worst)
    }

    /// The interior maximum, located where `sin_r^r(kx) = 1/r`.
    pub fn extremum(&self, cfg: &NumericsConfig) -> Result<ExtremumReport> {
        let pair = self.pair();
        let pi = pi_pq(pair, cfg)?;
        let r = self.r;
        let r_star = r / (r - 1.0);
        let location =
            2.0 * self.length / pi * asin_pq(r.powf(-1.0 / r), pair, cfg)?;
        let amp = 2.0 * self.length / ((2.0 - r) * pi);
        let value = amp * r.powf(-1.0 / r) * r_star.powf(-1.0 / r_star);
        Ok(ExtremumReport {
            location,
            value,
            midpoint_relation: classify(location, self.length),
        })
    }
}

/// The two-exponent problem on `[0, H]` with `p, q > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralProblem {
    pair: ParamPair,
    length: f64,
}

impl GeneralProblem {
    pub fn new(p: f64, q: f64, length: f64) -> Result<Self> {
        let pair = ParamPair::new(p, q)?;
        if !length.is_finite() || length <= 0.0 {
            return Err(domain(format!("domain length must be positive, got {length}")));
        }
        Ok(Self { pair, length })
    }

    pub fn p(&self) -> f64 {
        self.pair.p()
    }

    pub fn q(&self) -> f64 {
        self.pair.q()
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// The solution is built from the conjugate-first family.
    fn inner(&self) -> ParamPair {
        ParamPair::new(self.pair.p_star(), self.pair.q()).unwrap()
    }

    /// Solution value `u(x)`.
    pub fn value(&self, x: f64, cfg: &NumericsConfig) -> Result<f64> {
        let x = check_position(x, self.length)?;
        let inner = self.inner();
        let pi = pi_pq(inner, cfg)?;
        let t = pi / (2.0 * self.length) * x;
        let pt = sin_cos_pq(t, inner, cfg)?;
        let amp = 2.0 * self.length / (self.q() * pi);
        Ok(amp * pt.sin * pt.cos.powf(inner.p() - 1.0))
    }

    /// Closed-form slope `u'(x) = 1/q - (1/p + 1/q) sin^q(kx)`.
    pub fn derivative(&self, x: f64, cfg: &NumericsConfig) -> Result<f64> {
        let x = check_position(x, self.length)?;
        let inner = self.inner();
        let pi = pi_pq(inner, cfg)?;
        let t = pi / (2.0 * self.length) * x;
        let s = sin_pq(t, inner, cfg)?;
        let (p, q) = (self.p(), self.q());
        Ok(1.0 / q - (1.0 / p + 1.0 / q) * s.powf(q))
    }

    /// Worst defect of `(p-q) u' - pq (u')^2 + (p+q) u u'' + 1` over the
    /// window `[0.05 H, 0.95 H]`, with derivatives by central differences
    /// on an `n`-panel grid.
    pub fn residual(&self, n: usize, cfg: &NumericsConfig) -> Result<f64> {
        check_grid_n(n)?;
        let inner = self.inner();
        let pi = pi_pq(inner, cfg)?;
        let (p, q) = (self.p(), self.q());
        let amp = 2.0 * self.length / (q * pi);
        let expo = inner.p() - 1.0;
        let grid = gtf_grid(inner, 0.0, 0.5 * pi, n, cfg)?;
        let u: Vec<f64> = grid.iter().map(|pt| amp * pt.sin * pt.cos.powf(expo)).collect();
        let h = self.length / n as f64;
        let (lo, hi) = (0.05 * self.length, 0.95 * self.length);
        let mut worst = 0.0_f64;
        for i in 1..n {
            let x = i as f64 * h;
            if x < lo - 1e-12 || x > hi + 1e-12 {
                continue;
            }
            let d1 = (u[i + 1] - u[i - 1]) / (2.0 * h);
            let d2 = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
            let res = (p - q) * d1 - p * q * d1 * d1 + (p + q) * u[i] * d2 + 1.0;
            worst = worst.max(res.abs());
        }
        Ok(worst)
    }

    /// The interior maximum, located where `sin^q(kx) = p/(p+q)`.
    pub fn extremum(&self, cfg: &NumericsConfig) -> Result<ExtremumReport> {
        let inner = self.inner();
        let pi = pi_pq(inner, cfg)?;
        let (p, q) = (self.p(), self.q());
        let location = 2.0 * self.length / pi
            * asin_pq((p / (p + q)).powf(1.0 / q), inner, cfg)?;
        let value = 2.0 * self.length / (q * pi)
            * (q / (p + q)).powf(1.0 / p)
            * (p / (p + q)).powf(1.0 / q);
        Ok(ExtremumReport {
            location,
            value,
            midpoint_relation: classify(location, self.length),
        })
    }
}

/// Orders `(p*/(p*+q))^(1/q)` against the quarter-period value
/// `sin_pq(pi_pq/4)`.
///
/// The outcome is decided by the exponents alone: `Less` iff `p* > q`,
/// `Equal` iff `p* = q` (both sides then equal `2^(-1/q)`), `Greater`
/// iff `p* < q`. Ties are called within an absolute `1e-10`.
pub fn median_trichotomy(pair: ParamPair, cfg: &NumericsConfig) -> Result<Ordering> {
    let threshold = (pair.p_star() / (pair.p_star() + pair.q())).powf(1.0 / pair.q());
    let quarter = 0.25 * pi_pq(pair, cfg)?;
    let median = sin_pq(quarter, pair, cfg)?;
    if (threshold - median).abs() <= 1e-10 {
        Ok(Ordering::Equal)
    } else if threshold < median {
        Ok(Ordering::Less)
    } else {
        Ok(Ordering::Greater)
    }
}
