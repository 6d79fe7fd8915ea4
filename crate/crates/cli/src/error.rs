use std::path::PathBuf;

use assoc_sort::{BaselineError, SortError, WorkloadError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: cannot parse `{token}` as an integer")]
    Parse { line: usize, token: String },
    #[error("{0}")]
    Format(String),
    #[error("{location}: value {value} exceeds {bound} (2^63-1); pass --full-universe to sort it")]
    Bound { location: String, value: u64, bound: u64 },
    #[error(transparent)]
    Sort(#[from] SortError),
    #[error(transparent)]
    Workload(#[from] WorkloadError),
    #[error(transparent)]
    Baseline(#[from] BaselineError),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1 for verification failures, 2 for usage and I/O problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}
