use cktrig::CkError;
use serde::Serialize;
use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// The request could not be parsed or is not a supported combination.
    #[error("{0}")]
    Parse(String),

    /// The engine rejected the request.
    #[error(transparent)]
    Engine(#[from] CkError),

    /// A verification ran but some residual exceeded the tolerance.
    #[error("{0}")]
    Verification(String),

    #[error("cannot write report file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 0 success, 1 verification or I/O failure, 2 no such triangle,
    /// 3 underdetermined, 4 unparseable request.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 4,
            CliError::Engine(CkError::Underdetermined { .. }) => 3,
            CliError::Engine(
                CkError::Existence(_)
                | CkError::Range(_)
                | CkError::Kind(_)
                | CkError::Inconsistent(_)
                | CkError::Degenerate(_)
                | CkError::Constraint { .. },
            ) => 2,
            CliError::Engine(_) | CliError::Verification(_) | CliError::Io { .. } => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Engine(CkError::Underdetermined { .. }) => "underdetermined",
            CliError::Engine(_) if self.exit_code() == 2 => "existence",
            CliError::Engine(_) => "engine",
            CliError::Verification(_) => "verification",
            CliError::Io { .. } => "io",
        }
    }

    /// The machine-readable form written to stderr.
    pub fn to_json(&self) -> ErrorRecord {
        ErrorRecord { error: self.kind(), exit_code: self.exit_code(), message: self.to_string() }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub error: &'static str,
    pub exit_code: i32,
    pub message: String,
}

pub type CliResult<T> = std::result::Result<T, CliError>;
