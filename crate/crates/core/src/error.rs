use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("bivector is not antisymmetric")]
    BivectorNotAntisymmetric,

    #[error("metric is not symmetric")]
    MetricNotSymmetric,

    #[error("metric is not positive definite")]
    MetricNotPositiveDefinite,

    #[error("form not symplectic on 𝔤")]
    DegenerateForm,

    #[error("form is not antisymmetric")]
    FormNotAntisymmetric,

    #[error("Jacobi identity fails at (e{0}, e{1}, e{2})")]
    NotLieAlgebra(usize, usize, usize),

    #[error("metric Lie algebra is not flat")]
    NotFlat,

    #[error("dimension {0} is odd")]
    OddDimension(usize),

    #[error("rotation weights are not in the field: {0}")]
    NonRationalWeights(String),

    #[error("adapted basis extraction failed: {0}")]
    AdaptedBasis(String),

    #[error("invalid construction data: {0}")]
    InvalidConstruction(String),

    #[error("six compatibility equations fail: {0}")]
    EqproViolation(String),

    #[error("𝔥 is not Kähler for the given metric and form")]
    NotKahler,

    #[error("endomorphism is not in sp(𝔥, ω) ∩ Der(𝔥)")]
    NotSymplecticDerivation,

    #[error("φ is not a representation")]
    NotRepresentation,

    #[error("invalid sl(2) generators: {0}")]
    InvalidGenerators(String),

    #[error("condition {0} violated")]
    Inadmissible(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("{0}")]
    Expression(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
