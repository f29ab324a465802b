use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero binomial")]
    ZeroBinomial,

    #[error("term order matrix has rank {rank}, needs rank {n}")]
    RankDeficient { rank: usize, n: usize },

    #[error("vector is not homogeneous for the grading (not in ker A)")]
    Inhomogeneous,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("grading not positive")]
    NotPositive,

    #[error("cannot certify termination: {0}")]
    CannotCertifyTermination(String),

    #[error("reduction did not terminate within {0} steps")]
    NonTermination(usize),

    #[error("lattice basis is linearly dependent")]
    DependentBasis,

    #[error("weight vector lies outside the closed cone of the basis")]
    OutsideCone,

    #[error("vector is not an irredundant facet of the cell")]
    NotAFacet,

    #[error("weight vector is not generic (lies on the hyperplane of {0:?})")]
    NonGeneric(Vec<i64>),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
