use thiserror::Error;

/// Errors raised by model construction and the limit engines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("simplex {0:?} is not face-closed in the complex")]
    NotFaceClosed(Vec<String>),
    #[error("{0}")]
    InvalidComplex(String),
    #[error("vertex map sends simplex {0:?} outside the target complex")]
    NotSimplicial(Vec<String>),
    #[error("map does not send the subcomplex into the target subcomplex (vertex `{0}`)")]
    SubNotPreserved(String),
    #[error("homomorphism does not respect torsion orders (generator {0})")]
    MalformedHom(usize),
    #[error("mismatched source/target: {0}")]
    Mismatch(String),
    #[error("{0}")]
    InvalidCover(String),
    #[error("covers live on different carrier pairs")]
    DifferentCarriers,
    #[error("map is not proper: {0}")]
    NotProper(String),
    #[error("stage {stage} out of range (space depth {depth})")]
    StageOutOfRange { stage: usize, depth: usize },
    #[error("excision precondition violated at vertex `{0}`: it is not interior to the subcomplex")]
    ExcisionPrecondition(String),
    #[error("stagewise squares do not commute at stage {0}")]
    NonCommuting(usize),
    #[error("limit inconclusive: {0}")]
    Inconclusive(String),
    #[error("unsupported coefficients: {0}")]
    UnsupportedCoefficients(String),
    #[error("{0}")]
    Invalid(String),
}
