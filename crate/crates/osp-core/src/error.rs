use thiserror::Error;

/// Errors surfaced by the library.
///
/// Everything except `Internal` means the caller handed us invalid input;
/// `Internal` means a self-check that should always hold has failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family or shape mismatch: {0}")]
    Mismatch(String),
    #[error("rank cap exceeded: {0}")]
    RankCap(String),
    #[error("dimension does not fit in u64")]
    DimensionOverflow,
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by bad input (as opposed to broken internals).
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
