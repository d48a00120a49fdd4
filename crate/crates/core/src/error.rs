use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Jacobi weight exponent {0}: must be greater than -1")]
    InvalidWeight(f64),
    #[error("integrated polynomial degree must be at least 1")]
    ZeroIntegratedDegree,
    #[error("quadrature rule needs at least one point")]
    EmptyRule,
    #[error("index {index} is not a valid {what} for p = {p}")]
    IndexOutOfRange {
        what: &'static str,
        index: String,
        p: usize,
    },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("families live on different elements ({0} vs {1})")]
    ElementMismatch(&'static str, &'static str),
    #[error("families have different value dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("recombination block {block} is singular: {reason}")]
    SingularRecombination { block: String, reason: String },
    #[error("non-finite entry in Gram matrix at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
