use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    #[error("matrix is not symmetric: max |s_ij - s_ji| = {deviation:e} exceeds {tolerance:e}")]
    Asymmetric { deviation: f64, tolerance: f64 },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("eigenvalue {value:e} is negative beyond rounding tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("{what} = {value} is out of range [{min}, {max}]")]
    Range {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("spectral ratio is undefined: total variance is zero")]
    UndefinedRatio,

    #[error("first principal component is vertical; slope is undefined")]
    VerticalLine,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{path}: line {line}{}: {message}", column.map(|c| format!(", field {c}")).unwrap_or_default())]
    Parse {
        path: String,
        line: usize,
        column: Option<usize>,
        message: String,
    },

    #[error("{path}: invalid PGM: {message}")]
    Format { path: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Caller asked for something impossible (bad `r`, bad `k`, ...).
    Usage,
    /// Input data or file is malformed or too small.
    Data,
    /// The numerics failed or the result is undefined.
    Numeric,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Range { .. } | Error::Argument(_) => ErrorKind::Usage,
            Error::Shape { .. }
            | Error::InsufficientSamples { .. }
            | Error::Parse { .. }
            | Error::Format { .. }
            | Error::Io { .. } => ErrorKind::Data,
            Error::Asymmetric { .. }
            | Error::NoConvergence { .. }
            | Error::NegativeEigenvalue { .. }
            | Error::NonFinite(_)
            | Error::UndefinedRatio
            | Error::VerticalLine => ErrorKind::Numeric,
        }
    }

    pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Shape {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn range(what: &'static str, value: usize, min: usize, max: usize) -> Self {
        Error::Range {
            what,
            value,
            min,
            max,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
