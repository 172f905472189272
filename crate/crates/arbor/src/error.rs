use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes:
/// domain/parse errors exit 1, budget exhaustion exits 2.
#[derive(Debug, Error)]
pub enum ArborError {
    #[error("{0}")]
    Domain(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("work budget exceeded: {steps} extension steps performed, budget {budget}")]
    Budget { steps: u64, budget: u64 },
}

impl ArborError {
    pub fn domain(msg: impl Into<String>) -> Self {
        ArborError::Domain(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ArborError::Domain(_) | ArborError::Parse { .. } => 1,
            ArborError::Budget { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, ArborError>;
