use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not an inverse semigroup: {0}")]
    NotInverse(String),

    #[error("closure exceeds the element cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("characteristic {p} divides |G(e)| = {order} for Λ member {idempotent}")]
    Characteristic {
        p: u64,
        order: usize,
        idempotent: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotInverse(_) | Error::Characteristic { .. } => 3,
            Error::CapExceeded { .. } => 4,
            _ => 2,
        }
    }
}
