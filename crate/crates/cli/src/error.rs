use thiserror::Error;

/// Failure classes of the command line; each maps to its own exit status.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => exit::IO,
            CliError::Parse(_) => exit::PARSE,
            CliError::Validation(_) => exit::VALIDATION,
        }
    }
}

impl From<lie_weyl::Error> for CliError {
    fn from(e: lie_weyl::Error) -> Self {
        match e {
            lie_weyl::Error::Parse(_)
            | lie_weyl::Error::Range(_)
            | lie_weyl::Error::DuplicateTerm { .. } => CliError::Parse(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

/// Process exit statuses. Usage errors use clap's status 2.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IO: u8 = 1;
    pub const PARSE: u8 = 3;
    pub const VALIDATION: u8 = 4;
    /// The computation ran but disagrees with the expected result.
    pub const MISMATCH: u8 = 5;
}
