use thiserror::Error;

/// Errors raised by the numerical kernel, channel model, analytic formulas
/// and Monte Carlo estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument is valid mathematically but outside the range this
    /// implementation evaluates.
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),

    /// Parameters make the evaluation ill-posed (coincident poles, a contour
    /// placed on a pole).
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    /// A numerical procedure ran out of budget before reaching its target.
    /// `value` is the best partial result.
    #[error("accuracy target missed: value {value:e}, error estimate {err_estimate:e}")]
    Accuracy { value: f64, err_estimate: f64 },

    /// Two Monte Carlo estimates cannot be pooled.
    #[error("merge rejected: {0}")]
    Merge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
