use std::path::PathBuf;

/// Everything that ends a run with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] pompeiu::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Document(String),
}

impl CliError {
    pub(crate) fn at(line: usize, message: impl std::fmt::Display) -> Self {
        CliError::Config {
            line,
            message: message.to_string(),
        }
    }
}
