//! Crate-wide error type and exit-code mapping.

/// Errors raised by constructions and checks.
///
/// `SizeLimit` is the only resource error; everything else is a domain error.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("not a preorder: {0}")]
    NotAPreorder(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map is not continuous")]
    NotContinuous,
    #[error("map is not a quotient map")]
    NotQuotient,
    #[error("size limit exceeded: needed {needed}, limit {limit}")]
    SizeLimit { needed: usize, limit: usize },
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("cover base mismatch")]
    BaseMismatch,
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("unknown builtin name: {0}")]
    UnknownName(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Short machine-readable code, stable across releases.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotATopology(_) => "NotATopology",
            Error::NotAPreorder(_) => "NotAPreorder",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::InvalidMap(_) => "InvalidMap",
            Error::NotSurjective => "NotSurjective",
            Error::NotContinuous => "NotContinuous",
            Error::NotQuotient => "NotQuotient",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::AlphabetMismatch => "AlphabetMismatch",
            Error::CarrierMismatch(_) => "CarrierMismatch",
            Error::BaseMismatch => "BaseMismatch",
            Error::InvalidCover(_) => "InvalidCover",
            Error::UnknownName(_) => "UnknownName",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// Process exit code: 2 for resource limits, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeLimit { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
