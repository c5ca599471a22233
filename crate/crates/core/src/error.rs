use thiserror::Error;

/// Errors raised by partition construction, classification and the bijection.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("part {0} appears more than once")]
    DuplicatePart(u64),
    #[error("part {0} is not positive")]
    NonPositivePart(i64),
    #[error("argument out of range: {0}")]
    Domain(String),
    #[error("{0} is not a triangular number")]
    NotTriangularSum(u64),
    #[error("the partition is the complete partition")]
    IsComplete,
    #[error("not a maximal unrefinable partition: {0}")]
    NotMaximal(String),
    #[error("the partition is refinable: {0}+{1}={2}")]
    NotUnrefinable(u64, u64, u64),
    #[error("invalid list of small missing parts: {0}")]
    InvalidMissingSet(String),
    #[error("not in the domain of the inverse map: {0}")]
    NotInDomain(String),
    #[error("reconstruction failed verification: {0}")]
    ReconstructionFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
