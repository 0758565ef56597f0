use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] rectlab::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("network error: {0}")]
    Network(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    /// 1 for failed checks, 2 for bad input, 3 for I/O and network trouble.
    pub fn exit_code(&self) -> ExitCode {
        let code = match self {
            CliError::CheckFailed(_) => 1,
            CliError::Usage(_) | CliError::Json(_) => 2,
            CliError::Core(rectlab::Error::Cache(_)) => 3,
            CliError::Core(_) => 2,
            CliError::Io(_) | CliError::Network(_) => 3,
        };
        ExitCode::from(code)
    }
}

pub type CliResult<T> = Result<T, CliError>;
