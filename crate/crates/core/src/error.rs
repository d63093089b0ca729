use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("forms live on different algebras")]
    MismatchedAlgebras,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("class undefined for ω=0")]
    ZeroForm,
    #[error("no interior product of a function (grade 0 form)")]
    InteriorOfFunction,
    #[error("class computations disagree: wedge powers give {wedge}, characteristic space gives {kernel}")]
    ClassDisagreement { wedge: usize, kernel: usize },
    #[error("not a 2-cocycle")]
    NotCocycle,
    #[error("not symplectic")]
    NotSymplectic,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("variable sets differ")]
    VariableMismatch,
    #[error("not a first integral: depends on {0}")]
    NotFirstIntegral(String),
    #[error("matrix is not orthogonal with determinant 1")]
    NotOrthogonal,
    #[error("algebra is not written in a contact-adapted basis: {0}")]
    NotContactAdapted(String),
    #[error("center is not spanned by a single basis vector")]
    CenterNotAxis,
    #[error("no endomorphism normalizes the cocycle")]
    NotNormalizable,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown catalog id: {0}")]
    UnknownCatalog(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
