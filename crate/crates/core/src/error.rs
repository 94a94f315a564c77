use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every stage of the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("{routine} did not converge within {budget} iterations")]
    NonConvergence { routine: &'static str, budget: usize },

    #[error("matrix is not Hermitian (relative residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("matrix is numerically singular (relative margin {margin:e})")]
    SingularInput { margin: f64 },

    #[error("matrix does not intertwine H (relative residual {residual:e})")]
    NotIntertwiner { residual: f64 },

    #[error("intertwiner space is empty")]
    EmptySpace,

    #[error("unit circle is contained in the spectrum of A")]
    UnitCircleCovered,

    #[error("tolerance {name} must be finite and strictly positive, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures caused by floating-point breakdown rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::UnitCircleCovered)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
