//! Classical special functions the trigonometric kernels reduce to.
//!
//! Everything here is hand-rolled on purpose: the crate's accuracy story
//! depends on the incomplete beta inverse being polished to machine
//! precision (second differences of downstream profiles divide any noise
//! by the grid step squared), and on the hypergeometric series using the
//! exact same stopping rule the identity checks assume.

mod beta;
mod gamma;
mod hyp2f1;

pub use beta::{inc_beta_lower, reg_inc_beta, reg_inc_beta_inv, BetaArgs};
pub(crate) use beta::{reg_inc_beta_inv_pair, InvSeed};
pub use gamma::ln_gamma;
pub use hyp2f1::{gauss_2f1, HypArgs};

use crate::error::Result;

/// Complete beta function `B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)`.
pub fn beta_fn(args: BetaArgs) -> Result<f64> {
    beta::beta(args)
}
