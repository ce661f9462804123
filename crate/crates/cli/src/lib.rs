//! Command-line plumbing for `qschur`: configuration, file formats, subcommands and the
//! verification suites `A1`–`A10`.

pub mod commands;
pub mod config;
pub mod io;
pub mod suites;

use thiserror::Error;

pub use config::Config;
pub use suites::{run_suite, Context, SuiteReport, SUITES};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] qschur::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 0 pass, 1 verification failure, 2 usage, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Core(qschur::Error::BudgetExceeded(_)) => 3,
            CliError::Core(qschur::Error::NonUnitriangular(_) | qschur::Error::StabilityNotReached(_)) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
