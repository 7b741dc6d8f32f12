use thiserror::Error;

/// Errors raised by the exact-arithmetic pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (e.g. `m = 0`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity that must be an integer came out fractional.
    #[error("internal consistency error: {what} evaluated to non-integer {value}")]
    NonIntegral { what: String, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
