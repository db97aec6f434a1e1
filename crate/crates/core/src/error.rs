use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// Two independent computation routes disagreed.
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    /// Process exit code used by the `qcorr` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidArgument(_) => 2,
            Error::InvalidState(_) | Error::NumericFailure(_) | Error::InternalConsistency(_) => 3,
            Error::Io { .. } => 4,
        }
    }
}
