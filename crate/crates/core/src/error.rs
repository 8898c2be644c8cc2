use thiserror::Error;

/// Errors raised by the combinatorial operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed one-line text {0:?}")]
    Malformed(String),
    #[error("expected {expected} entries, found {found}")]
    Length { expected: usize, found: usize },
    #[error("entry {value} out of range 0..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("duplicate nonzero entry {0}")]
    Duplicate(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("size {0} must be even")]
    OddSize(usize),
    #[error("size must be positive")]
    EmptySize,
    #[error("size {size} exceeds the supported bound {bound} for {what}")]
    Resource {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
