use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("malformed word '{0}'")]
    MalformedWord(String),
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("root is not positive")]
    NotPositive,
    #[error("root is not an inversion of the element")]
    NotAnInversion,
    #[error("root index {index} out of range (element has {len} inversions)")]
    RootIndex { index: usize, len: usize },
    #[error("search cap {0} exhausted")]
    CapExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, CoxeterError>;
