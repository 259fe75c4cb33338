use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    NonConvergence(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::NonConvergence(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub(crate) fn io(path: &std::path::Path, err: impl std::fmt::Display) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }
}

impl From<critdet::Error> for CliError {
    fn from(e: critdet::Error) -> Self {
        match e.kind() {
            critdet::ErrorKind::Input => CliError::Invalid(e.to_string()),
            critdet::ErrorKind::Numerical => CliError::NonConvergence(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
