use alloc::string::String;
use core::fmt;

use crate::space::Natural;

pub type Result<T> = core::result::Result<T, Error>;

/// Contract violations raised by constructions and evaluators.
///
/// Each variant has a stable machine name (see [`Error::name`]) which the
/// command-line front end reports verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A prefix (point or parameter) is shorter than the operation needs.
    InsufficientPrefix {
        required: Natural,
    },
    /// A clopen set was ranked against a measure bound it does not satisfy.
    MeasureTooLarge {
        bound_exp: u32,
    },
    /// The open set misses the basic open set with this index.
    NotDense {
        index: u64,
    },
    /// A full-measure truncation cannot reach measure `1 - 2^-m` at any level.
    InsufficientResolution {
        m: u64,
    },
    /// An input family breaks a structural invariant.
    InvariantViolated(String),
    IndexOutOfRange,
    LengthMismatch {
        left: usize,
        right: usize,
    },
    /// The working level exceeds the configured cap.
    LevelTooLarge {
        level: u64,
        cap: u32,
    },
    /// The interval partition has no block with this index.
    PartitionTooShort {
        block: usize,
    },
}

impl Error {
    pub fn insufficient(required: impl Into<Natural>) -> Self {
        Error::InsufficientPrefix {
            required: required.into(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Error::InsufficientPrefix { .. } => "InsufficientPrefix",
            Error::MeasureTooLarge { .. } => "MeasureTooLarge",
            Error::NotDense { .. } => "NotDense",
            Error::InsufficientResolution { .. } => "InsufficientResolution",
            Error::InvariantViolated(_) => "InvariantViolated",
            Error::IndexOutOfRange => "IndexOutOfRange",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::LevelTooLarge { .. } => "LevelTooLarge",
            Error::PartitionTooShort { .. } => "PartitionTooShort",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InsufficientPrefix { required } => {
                write!(f, "prefix too short: length {required} required")
            }
            Error::MeasureTooLarge { bound_exp } => {
                write!(f, "clopen set has measure >= 2^-{bound_exp}")
            }
            Error::NotDense { index } => {
                write!(f, "open set misses basic open set U_{index}")
            }
            Error::InsufficientResolution { m } => {
                write!(f, "no level carries measure >= 1 - 2^-{m} inside the set")
            }
            Error::InvariantViolated(what) => write!(f, "invariant violated: {what}"),
            Error::IndexOutOfRange => f.write_str("index out of range"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::LevelTooLarge { level, cap } => {
                write!(f, "level {level} exceeds the working cap {cap}")
            }
            Error::PartitionTooShort { block } => {
                write!(f, "partition has no block {block}")
            }
        }
    }
}
