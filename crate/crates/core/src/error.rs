use thiserror::Error;

/// Errors reported by the algebra routines.
///
/// `Invalid*` variants describe bad caller input; `Internal` marks a broken
/// invariant (an enumeration or indexing bug), never a property of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("negative argument: {0}")]
    NegativeArgument(i64),
    #[error("weight {weight} has threshold level {threshold} above level {level}")]
    NonIntegrable { weight: String, threshold: u64, level: u64 },
    #[error("matrix is not unit upper triangular: {0}")]
    NotUnitTriangular(String),
    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by caller input rather than an internal fault.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
