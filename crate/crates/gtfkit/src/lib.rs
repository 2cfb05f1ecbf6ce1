//! Generalized trigonometric functions with two parameters.
//!
//! The pair `(p, q)` generalizes the circular functions through the
//! inverse-function integral
//!
//! ```text
//! asin_pq(x) = INT_0^x (1 - t^q)^(-1/p) dt,   pi_pq = 2 asin_pq(1),
//! ```
//!
//! with `sin_pq` its inverse on `[0, pi_pq/2]` (extended by reflection),
//! `cos_pq = (sin_pq)'`, and the identity `cos_pq^p + sin_pq^q = 1`.
//! On top of the kernels the crate provides:
//!
//! * [`special`]: log-gamma, (incomplete) beta, its inverse, and the Gauss
//!   hypergeometric series these functions reduce to,
//! * [`quad`]: double-exponential (tanh-sinh) quadrature for the
//!   endpoint-singular integrands that appear throughout,
//! * [`gtf`]: the generalized trigonometric functions themselves,
//! * [`bvp`]: closed-form solutions and extremum reports for a family of
//!   nonlocal boundary-value problems on `[0, H]`,
//! * [`hyper`]: hypergeometric and integral identities satisfied by the
//!   functions, packaged as checkable lhs/rhs pairs,
//! * [`lyapunov`]: best constants of Lyapunov-type inequalities for the
//!   one-dimensional p-Laplacian, extremal weights and solutions, and a
//!   discrete Rayleigh quotient,
//! * [`verify`]: seeded verification suites that re-derive the identities
//!   numerically and report per-check residuals.
//!
//! Evaluators take a [`NumericsConfig`] of tolerances and budgets; batch
//! sweeps run in parallel when the default `parallel` feature is enabled
//! and sequentially otherwise, with identical results either way.

pub mod bvp;
pub mod config;
pub mod error;
pub mod exec;
pub mod gtf;
pub mod hyper;
pub mod lyapunov;
pub mod quad;
pub mod special;
pub mod verify;

pub use config::NumericsConfig;
pub use error::{Error, Result};
