use thiserror::Error;

/// Errors surfaced by the analysis toolkit.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty window: {0}")]
    EmptyWindow(String),

    #[error("window exhausted: {0}")]
    WindowExhausted(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
