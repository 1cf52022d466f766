use thiserror::Error;

/// Errors raised by the library. Every variant is a domain rejection: the
/// inputs were well-formed but violate a precondition of the operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system component {family}{rank}: {reason}")]
    InvalidComponent {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse root system {0:?}")]
    RootSystemSyntax(String),
    #[error("weight has {found} labels but the root system has rank {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    RootIndex { index: usize, rank: usize },
    #[error("{0} is not a prime")]
    NotPrime(i64),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
