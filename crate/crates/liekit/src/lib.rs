//! Command-line front end for `liekit-core`.
//!
//! [`cli::Cli`] holds the argument grammar, [`run`] dispatches a parsed
//! command and returns the rendered output. Text output is meant for people;
//! JSON output carries `"schema_version": 1` and is stable under a parse and
//! re-serialize cycle.

pub mod algebra;
pub mod bench;
pub mod cli;
pub mod commands;
pub mod json;

pub use algebra::parse_algebra;
pub use cli::{Cli, Command};
pub use commands::run;

/// Failure of a command, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] liekit_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}
