use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid integer token {0:?}")]
    InvalidToken(String),
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("parts are not weakly decreasing at position {0}")]
    NotWeaklyDecreasing(usize),
    #[error("weights differ: {0:?}")]
    WeightMismatch(Vec<u64>),
    #[error("partition of length {length} exceeds bound {bound}")]
    LengthExceedsBound { length: usize, bound: usize },
    #[error("no permutation of the triple fits the (2,2,4) length pattern")]
    NoCanonicalForm,
    #[error("weight {weight} exceeds the configured cap {cap}")]
    WeightCapExceeded { weight: u64, cap: u64 },
    #[error("Schur peeling left a nonzero residual")]
    NonzeroResidual,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expected u >= t >= s, got ({u},{t},{s})")]
    OrderingViolated { u: u64, t: u64, s: u64 },
    #[error("face condition violated: {0}")]
    FaceConditionViolated(String),
    #[error("bound {0} is below the minimum {1}")]
    BoundTooSmall(usize, usize),
    #[error("atomic shift not available for (n, m) = ({0}, {1})")]
    UnsupportedDimension(usize, usize),
    #[error("row index {index} out of range for {rows} rows")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("no quasipolynomial with period <= {max_period} and degree <= {max_degree} fits")]
    NoFitWithinBounds { max_period: usize, max_degree: usize },
    #[error("need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("{0} rows is too large for exhaustive minor enumeration")]
    TooLargeForExhaustiveCheck(usize),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("arithmetic overflow while dilating by {0}")]
    Overflow(u64),
}

impl Error {
    /// Stable variant name, used in structured CLI error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidToken(_) => "InvalidToken",
            Error::NegativePart(_) => "NegativePart",
            Error::NotWeaklyDecreasing(_) => "NotWeaklyDecreasing",
            Error::WeightMismatch(_) => "WeightMismatch",
            Error::LengthExceedsBound { .. } => "LengthExceedsBound",
            Error::NoCanonicalForm => "NoCanonicalForm",
            Error::WeightCapExceeded { .. } => "WeightCapExceeded",
            Error::NonzeroResidual => "NonzeroResidual",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::OrderingViolated { .. } => "OrderingViolated",
            Error::FaceConditionViolated(_) => "FaceConditionViolated",
            Error::BoundTooSmall(..) => "BoundTooSmall",
            Error::UnsupportedDimension(..) => "UnsupportedDimension",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NoFitWithinBounds { .. } => "NoFitWithinBounds",
            Error::InsufficientData { .. } => "InsufficientData",
            Error::TooLargeForExhaustiveCheck(_) => "TooLargeForExhaustiveCheck",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::Overflow(_) => "Overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
