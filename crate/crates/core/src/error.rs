use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division")]
    InexactDivision,
    #[error("ring mismatch")]
    RingMismatch,
    #[error("undefined exponent")]
    UndefinedExponent,
    #[error("non-unit base")]
    NonUnitBase,
    #[error("non-unit germ")]
    NonUnitGerm,
    #[error("entry is not a germ at the center")]
    NotAGerm,
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("singular matrix")]
    Singular,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not coprime")]
    NotCoprime,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a valid character")]
    InvalidCharacter,
    #[error("trivial character rejected")]
    TrivialCharacter,
    #[error("genericity hypothesis violated: a lies in {{0, -b_1, ..., -b_m}}")]
    NonGeneric,
    #[error("coprimality failed")]
    CoprimalityFailed,
    #[error("pipeline inconsistency: {0}")]
    PipelineInconsistency(String),
    #[error("B not polynomial")]
    BNotPolynomial,
    #[error("Hermitian defect identity failed")]
    HermitianDefect,
    #[error("twisted Hermitian identity failed")]
    TwistedHermitian,
    #[error("module oracle disagreement")]
    ModuleOracleDisagreement,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
