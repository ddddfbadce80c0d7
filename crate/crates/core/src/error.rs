use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph is disconnected: vertex {unreached} is not reachable from {root}")]
    Disconnected { root: usize, unreached: usize },

    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A step that the construction guarantees cannot fail did fail.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
