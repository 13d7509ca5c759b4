//! CLI error taxonomy: configuration problems (exit code 2) versus
//! numerical/runtime failures from the underlying library (exit code 3).

use std::path::PathBuf;

/// Exit code for configuration errors (bad flags, keys, combinations,
/// unreadable inputs).
pub const EXIT_CONFIG: i32 = 2;
/// Exit code for numerical failures (non-convergence, singular matrices,
/// unusable regimes discovered at run time).
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("config error: cannot read {path}: {source}")]
    ConfigIo {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("numerical failure: {0}")]
    Numerical(alphatune::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::ConfigIo { .. } => EXIT_CONFIG,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<alphatune::Error> for CliError {
    fn from(e: alphatune::Error) -> Self {
        match e {
            // malformed user-supplied data and file-system problems are
            // usage errors, not numerical ones
            alphatune::Error::CsvFormat { .. } | alphatune::Error::Io(_) => {
                CliError::Config(e.to_string())
            }
            other => CliError::Numerical(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
