use thiserror::Error;

/// Failures that end a command without a report. Verification outcomes are
/// not errors; they go into the report with exit code 0.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    /// Schema or value error at a JSON path; `offset` is a character offset
    /// into the string at that path when one applies.
    #[error("{path}: {message}")]
    Schema { path: String, offset: Option<usize>, message: String },
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

impl CliError {
    pub fn schema(path: &str, message: impl Into<String>) -> CliError {
        CliError::Schema { path: path.to_string(), offset: None, message: message.into() }
    }

    /// Attaches a core error to the document location it came from.
    pub fn core(path: &str, e: tarski_core::Error) -> CliError {
        match e {
            tarski_core::Error::BoundExceeded(s) => CliError::BoundExceeded(s),
            tarski_core::Error::InvalidLetter { offset, .. } => {
                CliError::Schema { path: path.to_string(), offset: Some(offset), message: e.to_string() }
            }
            e => CliError::schema(path, e.to_string()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BoundExceeded(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
