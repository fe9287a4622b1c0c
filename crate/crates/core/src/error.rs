use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition error: {0}")]
    Composition(String),
    #[error("order error: {0}")]
    Order(String),
    #[error("homogeneity error: {0}")]
    Homogeneity(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("periodicity violation: {0}")]
    Periodicity(String),
    #[error("power series inversion failed: {0}")]
    Inversion(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
