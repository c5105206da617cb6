use thiserror::Error;

/// Failure modes shared by every module.
///
/// The variants map one-to-one onto the CLI exit-status classes: numeric
/// integrity failures are reported separately from domain/config problems.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Request beyond a configured cap (polynomial degree, quadrature order).
    #[error("capability error: {0}")]
    Capability(String),
    /// Precondition of an operation violated by an otherwise valid value.
    #[error("contract error: {0}")]
    Contract(String),
    /// Invalid or degenerate configuration (grids, steps).
    #[error("config error: {0}")]
    Config(String),
    /// Computation produced non-finite values or broke a numeric invariant.
    #[error("numeric integrity error: {0}")]
    NumericIntegrity(String),
}

impl Error {
    pub fn is_numeric_integrity(&self) -> bool {
        matches!(self, Error::NumericIntegrity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
