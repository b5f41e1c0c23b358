use alloc::string::String;

/// Errors raised by the core pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A structural invariant of a model or scenario does not hold.
    /// The message names the violated invariant.
    #[error("validation: {0}")]
    Validation(String),
    /// A model file could not be parsed.
    #[error("parse: {0}")]
    Parse(String),
    /// An operation received inputs outside its precondition.
    #[error("{0}")]
    Precondition(String),
    /// Numeric failure inside geometry or optimization (LP infeasible where
    /// feasibility was required, degenerate inputs, ...).
    #[error("numeric: {0}")]
    Numeric(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}

pub type Result<T> = core::result::Result<T, Error>;
