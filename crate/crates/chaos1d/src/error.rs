use thiserror::Error;

/// Errors produced by the library core.
#[derive(Debug, Error)]
pub enum ChaosError {
    #[error("control parameter r = {0} outside the valid range (0, 4]")]
    ControlParameterOutOfRange(f64),

    #[error("state x = {0} outside the valid range [0, 1)")]
    StateOutOfRange(f64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("series too short: have {have}, need at least {need}")]
    SeriesTooShort { have: usize, need: usize },

    #[error("sweep failed at r = {r}: {source}")]
    SweepCell {
        r: f64,
        #[source]
        source: Box<ChaosError>,
    },

    #[error("failed to write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, ChaosError>;

impl ChaosError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        ChaosError::InvalidArgument(msg.into())
    }
}
