use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input matrices are linearly dependent")]
    DependentBasis,

    #[error("flag is not nested: {0}")]
    NotNested(String),

    #[error("matrices are not closed under the bracket")]
    NotClosed,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
