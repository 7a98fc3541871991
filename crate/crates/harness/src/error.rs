//! Harness errors and their process exit codes.

use thiserror::Error;
use wradius_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const DIMENSION: u8 = 3;
    pub const UNKNOWN_BOUND: u8 = 4;
    pub const USAGE: u8 = 64;
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("unknown bound `{0}`")]
    UnknownBound(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("{0}")]
    Violation(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl HarnessError {
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Io { .. } | HarnessError::Parse(_) => exit::PARSE,
            HarnessError::Dimension(_) => exit::DIMENSION,
            HarnessError::UnknownBound(_) => exit::UNKNOWN_BOUND,
            HarnessError::Usage(_) => exit::USAGE,
            HarnessError::Violation(_) => exit::VIOLATION,
            HarnessError::Core(e) => match e {
                CoreError::Empty { .. }
                | CoreError::EntryCount { .. }
                | CoreError::NonSquare { .. }
                | CoreError::DimensionMismatch { .. }
                | CoreError::BlockLayout(_)
                | CoreError::NotApplicable(_) => exit::DIMENSION,
                CoreError::NonFinite { .. } => exit::PARSE,
                CoreError::UnknownBound(_) => exit::UNKNOWN_BOUND,
                CoreError::MissingParameter(_)
                | CoreError::ExponentOutOfRange(_)
                | CoreError::ToleranceNotPositive(_) => exit::USAGE,
                _ => exit::VIOLATION,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
