use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Solver(#[from] mirror_prox::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, BenchError>;
