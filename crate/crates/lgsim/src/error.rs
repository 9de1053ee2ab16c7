use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced when constructing or evaluating simulator objects.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Spin quantum number outside the allowed domain (j ≥ 0).
    #[error("invalid spin: {0}")]
    InvalidSpin(String),

    /// Partition fails to cover the basis exactly once, or a block is malformed.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Scalar parameter outside its domain (b ∉ [0,1], σ ≤ 0, gap ≤ 0, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Operator handed to a constructor violates a structural precondition.
    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    /// Matrix fails the density-matrix checks (hermiticity, unit trace, positivity).
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    /// Operands act on Hilbert spaces of different dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A numeric input is NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// A sweep grid is empty, unsorted, or out of domain.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A string does not parse as the expected value.
    #[error("malformed value: {0}")]
    Malformed(String),

    /// Conditioning on an outcome whose probability is below the threshold.
    #[error(
        "outcome '{outcome}' has probability {probability:.3e}, below the conditioning \
         threshold; the conditional state is ill-posed"
    )]
    OutcomeImpossible { outcome: char, probability: f64 },
}
