use thiserror::Error;

#[derive(Debug, Error)]
pub enum AvrError {
    #[error("index {index} out of bounds for panel of length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
}

impl AvrError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        AvrError::InvalidArgument(msg.into())
    }
}
