use crate::exactfield::FieldDescriptor;

/// Errors shared by every module of the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: cannot combine elements of {0} and {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("invalid input: {0}")]
    Usage(String),
    #[error("cannot parse {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
    #[error("root finder failed to converge from {starts} starting points")]
    NoConvergence { starts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
