use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a double-floor partition: [{0}]")]
    NotDoubleFloor(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("degree parity violation: {0}")]
    DegreeParity(String),
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("not a Lie element")]
    NotLie,
    #[error("genus mismatch: {0}")]
    GenusMismatch(String),
    #[error("unstable genus: {0}")]
    UnstableGenus(String),
    #[error("element is not Sp-invariant")]
    NotInvariant,
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
