use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("parse error in field {path}: {message}")]
    Field { path: String, message: String },

    #[error("validation error: {0}")]
    Validation(#[from] dehnscope_core::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for inputs that parse but fail the algebraic checks, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(dehnscope_core::Error::Malformed(_)) => 2,
            CliError::Validation(dehnscope_core::Error::UnknownFamily(_)) => 2,
            CliError::Validation(_) => 1,
            _ => 2,
        }
    }
}
