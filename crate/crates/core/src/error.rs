use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: expected {expected}, found {found}")]
    ConductorMismatch { expected: u32, found: u32 },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown identifier '{name}' at {position}")]
    UnknownIdentifier { name: String, position: usize },
    #[error("division is not exact")]
    InexactDivision,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("square root of {kappa} is not in the field; enlarge the conductor")]
    ExtensionRequired { kappa: String },
    #[error("square root of {kappa} could not be determined in the field")]
    SqrtUndetermined { kappa: String },
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
