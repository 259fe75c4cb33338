use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("unstable quadratic Hamiltonian: {0}")]
    Unstable(String),

    #[error("{what} did not converge (achieved {achieved:.3e}, requested {requested:.3e})")]
    NonConvergence {
        what: &'static str,
        achieved: f64,
        requested: f64,
    },

    #[error("divergent quantity: {0}")]
    Divergent(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Numerical,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidInput(_)
            | Error::DimensionMismatch { .. }
            | Error::Unstable(_)
            | Error::Divergent(_) => ErrorKind::Input,
            Error::NonConvergence { .. } | Error::NonFinite(_) => ErrorKind::Numerical,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects NaN and infinities in user-facing parameters.
pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::invalid(format!(
            "{name} must be finite, got {value}"
        )))
    }
}
