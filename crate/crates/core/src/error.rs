use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("objects live over different algebras or rings")]
    AlgebraMismatch,

    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    #[error("window insufficient: {0}")]
    WindowInsufficient(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code: 2 for parse errors, 3 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
