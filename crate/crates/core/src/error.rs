use thiserror::Error;

/// Errors produced by the simulation library.
#[derive(Debug, Error)]
pub enum Error {
    /// A level scheme or gate configuration failed validation.
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation was called with inconsistent arguments.
    #[error("argument error: {0}")]
    Argument(String),

    /// Operator/state dimensions do not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The integrator could not continue.
    #[error("integration failed at t = {t} us: {reason}")]
    Integration { t: f64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
