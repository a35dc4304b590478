//! Command-line front end for `torfix-core`: input documents, reports and
//! command dispatch.

pub mod commands;
pub mod input;
pub mod report;

use torfix_core::Error;

/// Exit code for malformed input.
pub const EXIT_MALFORMED: i32 = 1;
/// Exit code for inputs rejected by validation.
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Malformed(String),
    #[error("{name}: {source}", name = .source.name())]
    Invalid {
        #[from]
        source: Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => EXIT_MALFORMED,
            CliError::Invalid { .. } => EXIT_INVALID,
        }
    }
}
