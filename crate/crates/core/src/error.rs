use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("N must be at least 2, got {0}")]
    SizeTooSmall(usize),

    #[error("N = {n} is outside the supported range {min}..={max} for {what}")]
    SizeOutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    #[error("partition {partition} has maximal hook {hook}, not below N = {n}")]
    NotInYoungN {
        partition: Partition,
        hook: usize,
        n: usize,
    },

    #[error("invalid partition text {text:?}: {reason}")]
    PartitionSyntax { text: String, reason: String },

    #[error("index {index} out of range for N = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("site set is not an outer rim: {0}")]
    NotARim(String),

    #[error("invalid profile: {0}")]
    Profile(String),

    #[error("parameter r = {0} is outside [0, 1]")]
    ParameterOutOfRange(String),

    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },

    #[error("corner {row},{col} is not an inner corner of {partition}")]
    NotACorner {
        partition: Partition,
        row: usize,
        col: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::SizeTooSmall(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_range(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange { what, n, min, max })
    }
}
