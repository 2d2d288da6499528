use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid Cartan datum: {0}")]
    Cartan(String),
    #[error("word is not a reduced word for the longest element: {0}")]
    NotReduced(String),
    #[error("weight mismatch: {0}")]
    Weight(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("module shape error: {0}")]
    Shape(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
