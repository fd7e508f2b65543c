use thiserror::Error;
use vagueset::dataset::DatasetError;
use vagueset::{EvalError, EventError, SyntaxError};

/// Errors carry their process exit code: 1 usage or parse error, 2 data
/// validation error, 3 internal invariant violation.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Data(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Syntax(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<DatasetError> for CliError {
    fn from(e: DatasetError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<EventError> for CliError {
    fn from(e: EventError) -> Self {
        match e {
            EventError::UnknownAtom(_) => CliError::Usage(e.to_string()),
            other => CliError::Data(other.to_string()),
        }
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::UnknownAtom(_) | EvalError::HedgedOperand(_) => CliError::Usage(e.to_string()),
            EvalError::Event(inner) => inner.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}
