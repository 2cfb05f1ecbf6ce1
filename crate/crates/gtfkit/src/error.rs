use thiserror::Error;

/// Error type shared by every evaluator in the crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),
    /// An iterative scheme failed to meet its tolerance within its budget.
    #[error("no convergence: {0}")]
    NonConvergence(String),
    /// The input is structurally valid but degenerate (e.g. an identically
    /// zero function where a norm must be positive).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn no_convergence(msg: impl Into<String>) -> Error {
    Error::NonConvergence(msg.into())
}

pub(crate) fn degenerate(msg: impl Into<String>) -> Error {
    Error::Degenerate(msg.into())
}
