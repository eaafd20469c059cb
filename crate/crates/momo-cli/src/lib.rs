//! File formats, experiment plans and the batch harness behind the `momo`
//! binary. All numeric output uses Rust's shortest-roundtrip float
//! formatting, so files are bit-faithful and byte-identical across reruns.

pub mod csvio;
pub mod experiment;
pub mod plan;
pub mod report;

use std::fmt;

/// Errors split by exit code: usage problems exit 1, runtime failures 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Runtime(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<momo_core::types::Error> for CliError {
    fn from(e: momo_core::types::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}
