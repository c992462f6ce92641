use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("pattern mismatch: {0}")]
    Pattern(String),

    #[error("operation requires exact entries: {0}")]
    ExactOnly(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("values are not pairwise distinct: {0}")]
    Distinctness(String),

    #[error("corpus integrity failure in certificate `{id}`: {claim}")]
    CorpusIntegrity { id: String, claim: String },

    #[error("continuation failed at t = {t}: {message}")]
    Continuation { t: f64, message: String, path_log: Vec<PathStep> },

    #[error("seed rejected: {0}")]
    RejectedSeed(String),

    #[error("lift integrity: {0}")]
    LiftIntegrity(String),

    #[error("spectrum collision: {0}")]
    SpectrumCollision(String),
}

/// One accepted (or failed) step of a continuation path.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PathStep {
    pub t: f64,
    pub residual: f64,
    pub newton_iters: usize,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }
}
