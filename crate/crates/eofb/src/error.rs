use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 2;
    pub const IO: i32 = 3;
    pub const SOUNDNESS: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("soundness violation: {0}")]
    Soundness(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Invalid(_) => exit::INVALID_INPUT,
            CliError::Io(_) => exit::IO,
            CliError::Soundness(_) => exit::SOUNDNESS,
        }
    }

    pub(crate) fn from_csv(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }

    pub(crate) fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}

impl From<eofb_core::Error> for CliError {
    fn from(e: eofb_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}
