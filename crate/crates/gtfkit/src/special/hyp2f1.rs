//! Gauss hypergeometric function `2F1(a, b; c; x)` on `(-1, 1)`.
//!
//! The power series is summed with a geometric tail bound; close to the
//! right endpoint (`x > 0.95`) it is rearranged through the standard
//! connection formula in `1 - x`, which needs `c - a - b` positive and
//! safely away from the integers (the logarithmic cases are reported as
//! non-convergence rather than approximated).

use crate::config::NumericsConfig;
use crate::error::{domain, no_convergence, Result};
use crate::special::gamma::signed_gamma;

const SERIES_X_MAX: f64 = 0.95;
const INTEGER_GAP: f64 = 1e-8;

/// Validated argument bundle for [`gauss_2f1`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypArgs {
    a: f64,
    b: f64,
    c: f64,
    x: f64,
}

impl HypArgs {
    /// Requires finite parameters, `|x| < 1`, and `c` away from the poles
    /// at the non-positive integers.
    pub fn new(a: f64, b: f64, c: f64, x: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c), ("x", x)] {
            if !v.is_finite() {
                return Err(domain(format!("2F1 parameter {name} must be finite, got {v}")));
            }
        }
        if x.abs() >= 1.0 {
            return Err(domain(format!("2F1 series needs |x| < 1, got {x}")));
        }
        if c <= 0.5 && (c - c.round()).abs() < 1e-12 {
            return Err(domain(format!("2F1 pole: c = {c} is a non-positive integer")));
        }
        Ok(Self { a, b, c, x })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v == v.round()
}

/// Evaluates `2F1(a, b; c; x)`.
pub fn gauss_2f1(args: HypArgs, cfg: &NumericsConfig) -> Result<f64> {
    let HypArgs { a, b, c, x } = args;
    if x == 0.0 {
        return Ok(1.0);
    }
    // A terminating series is a polynomial; sum it no matter where x sits.
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return series(a, b, c, x, cfg);
    }
    if x <= SERIES_X_MAX {
        series(a, b, c, x, cfg)
    } else {
        right_endpoint(a, b, c, x, cfg)
    }
}

/// Plain power series with term recurrence
/// `t_{n+1} = t_n (a+n)(b+n) x / ((c+n)(n+1))`.
///
/// The remainder after term `n` is bounded by a geometric series with
/// ratio `|x|` once the term ratio has settled, so the sum stops when
/// that bound drops below the relative tolerance twice in a row.
fn series(a: f64, b: f64, c: f64, x: f64, cfg: &NumericsConfig) -> Result<f64> {
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let geometric = x.abs() / (1.0 - x.abs());
    let mut quiet = 0u32;
    for n in 0..cfg.max_iter {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if term.abs() * geometric <= cfg.rel_tol * sum.abs() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(no_convergence(format!(
        "2F1 series did not settle within {} terms (a={a}, b={b}, c={c}, x={x})",
        cfg.max_iter
    )))
}

/// Connection formula in `1 - x` for `x` close to 1:
///
/// ```text
/// F(a,b;c;x) = G(c)G(s)/(G(c-a)G(c-b)) F(a,b;1-s;1-x)
///            + (1-x)^s G(c)G(-s)/(G(a)G(b)) F(c-a,c-b;1+s;1-x),
/// ```
///
/// with `s = c - a - b`. Requires `s > 0` and non-integer; a gamma pole
/// in either denominator just switches that term off.
fn right_endpoint(a: f64, b: f64, c: f64, x: f64, cfg: &NumericsConfig) -> Result<f64> {
    let s = c - a - b;
    if s <= 0.0 {
        return Err(no_convergence(format!(
            "2F1 near x=1 needs c - a - b > 0, got {s} (a={a}, b={b}, c={c}, x={x})"
        )));
    }
    if (s - s.round()).abs() < INTEGER_GAP {
        return Err(no_convergence(format!(
            "2F1 near x=1 hits the logarithmic case: c - a - b = {s} is integral"
        )));
    }
    let y = 1.0 - x;
    let g_c = signed_gamma(c)?;
    let coef_near = match (signed_gamma(c - a), signed_gamma(c - b)) {
        (Ok(ga), Ok(gb)) => g_c * signed_gamma(s)? / (ga * gb),
        _ => 0.0,
    };
    let coef_far = match (signed_gamma(a), signed_gamma(b)) {
        (Ok(ga), Ok(gb)) => g_c * signed_gamma(-s)? / (ga * gb),
        _ => 0.0,
    };
    let mut value = 0.0;
    if coef_near != 0.0 {
        value += coef_near * series(a, b, 1.0 - s, y, cfg)?;
    }
    if coef_far != 0.0 {
        value += coef_far * (s * y.ln()).exp() * series(c - a, c - b, 1.0 + s, y, cfg)?;
    }
    Ok(value)
}
