//! Command-line errors and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] folia::Error),
    #[error("unknown builtin '{0}'")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(folia::Error::Parse { .. } | folia::Error::UnknownIdentifier { .. }) => 2,
            CliError::UnknownBuiltin(_) | CliError::Usage(_) => 2,
            CliError::Math(_) | CliError::Io(_) => 3,
        }
    }
}
