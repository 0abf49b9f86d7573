//! Command-line front end: input documents, command dispatch and reports.

pub mod commands;
pub mod document;
pub mod report;

use hopfext::HopfError;

pub use commands::{run_command, Command, Flags};
pub use document::{Datum, GroupSpec, InputDocument, Mode};
pub use report::{Check, CheckStatus, Format, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource limit: {0}")]
    Limit(String),
}

impl CliError {
    /// Wrap a library error raised while interpreting `path`.
    pub fn input(path: &str, e: HopfError) -> CliError {
        match e {
            HopfError::LimitExceeded { .. } => CliError::Limit(format!("{path}: {e}")),
            e => CliError::Input(format!("{path}: {e}")),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> CliError {
        match e {
            HopfError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}
