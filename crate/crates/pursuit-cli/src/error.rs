//! Error type for the command-line layer.

use pursuit_core::EngineError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{path}:{line}: {message}")]
    GraphParse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    Manifest { path: String, message: String },

    #[error(transparent)]
    Engine(#[from] EngineError),

    #[error("engines disagree: {0}")]
    Disagreement(String),
}

impl CliError {
    pub fn io(path: &str, err: &std::io::Error) -> CliError {
        CliError::Io {
            path: path.to_string(),
            message: err.to_string(),
        }
    }
}
