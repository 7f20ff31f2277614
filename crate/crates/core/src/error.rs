use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {what} (limit {limit}, reached {reached})")]
    Budget {
        what: String,
        limit: u64,
        reached: u64,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
