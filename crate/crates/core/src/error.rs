//! Crate-wide error type.

use std::fmt;

#[derive(Debug)]
pub enum ScsError {
    /// Invalid physical or numerical parameter.
    Parameter(String),
    /// Mismatched vector/matrix dimensions.
    Dimension(String),
    /// A matrix expected to be Hermitian was not, within tolerance.
    NonHermitian { deviation: f64 },
    /// Propagation produced non-finite values or failed to converge.
    Numerical {
        step: usize,
        norm: f64,
        condition: f64,
        message: String,
    },
    /// Ensemble-level failure (e.g. every member run aborted).
    Ensemble(String),
    /// Malformed data file.
    Format(String),
    Io(std::io::Error),
}

impl fmt::Display for ScsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScsError::Parameter(m) => write!(f, "parameter error: {m}"),
            ScsError::Dimension(m) => write!(f, "dimension mismatch: {m}"),
            ScsError::NonHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max deviation {deviation:.3e})")
            }
            ScsError::Numerical {
                step,
                norm,
                condition,
                message,
            } => write!(
                f,
                "numerical failure at step {step} (norm {norm:.3e}, overlap condition {condition:.3e}): {message}"
            ),
            ScsError::Ensemble(m) => write!(f, "ensemble error: {m}"),
            ScsError::Format(m) => write!(f, "format error: {m}"),
            ScsError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for ScsError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            ScsError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for ScsError {
    fn from(e: std::io::Error) -> Self {
        ScsError::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, ScsError>;
