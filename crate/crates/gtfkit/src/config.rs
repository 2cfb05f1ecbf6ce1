use crate::error::{domain, Result};

/// Tolerances and iteration budgets shared by the iterative evaluators.
///
/// `abs_tol` bounds accepted residuals of root-finders, `rel_tol` is the
/// stopping ratio of series and quadrature refinements, `max_iter` caps
/// every iteration loop, and `quad_points` sets the initial node count of
/// the double-exponential quadrature rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericsConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
    pub quad_points: usize,
}

impl Default for NumericsConfig {
    fn default() -> Self {
        NumericsConfig {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_iter: 500,
            quad_points: 61,
        }
    }
}

impl NumericsConfig {
    /// Reads overrides from `GTFKIT_ABS_TOL`, `GTFKIT_REL_TOL`,
    /// `GTFKIT_MAX_ITER` and `GTFKIT_QUAD_POINTS`; unset variables keep
    /// their defaults, unparsable values are an error.
    pub fn from_env() -> Result<Self> {
        let mut cfg = NumericsConfig::default();
        if let Some(v) = read_env("GTFKIT_ABS_TOL")? {
            cfg.abs_tol = parse_pos(&v, "GTFKIT_ABS_TOL")?;
        }
        if let Some(v) = read_env("GTFKIT_REL_TOL")? {
            cfg.rel_tol = parse_pos(&v, "GTFKIT_REL_TOL")?;
        }
        if let Some(v) = read_env("GTFKIT_MAX_ITER")? {
            cfg.max_iter = v
                .parse::<usize>()
                .map_err(|_| domain(format!("GTFKIT_MAX_ITER: not a positive integer: {v:?}")))?;
        }
        if let Some(v) = read_env("GTFKIT_QUAD_POINTS")? {
            cfg.quad_points = v
                .parse::<usize>()
                .map_err(|_| domain(format!("GTFKIT_QUAD_POINTS: not a positive integer: {v:?}")))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(domain("abs_tol must be positive and finite"));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(domain("rel_tol must be positive and finite"));
        }
        if self.max_iter == 0 {
            return Err(domain("max_iter must be at least 1"));
        }
        if self.quad_points < 3 {
            return Err(domain("quad_points must be at least 3"));
        }
        Ok(())
    }
}

fn read_env(name: &str) -> Result<Option<String>> {
    match std::env::var(name) {
        Ok(v) if v.is_empty() => Ok(None),
        Ok(v) => Ok(Some(v)),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(domain(format!("{name}: value is not valid unicode")))
        }
    }
}

fn parse_pos(v: &str, name: &str) -> Result<f64> {
    let x: f64 = v
        .parse()
        .map_err(|_| domain(format!("{name}: not a number: {v:?}")))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(domain(format!("{name}: must be positive and finite")))
    }
}
