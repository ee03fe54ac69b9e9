use thiserror::Error;

pub type Result<T> = std::result::Result<T, ArcatError>;

#[derive(Debug, Error)]
pub enum ArcatError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not admissible / infinite-dimensional: {0}")]
    NotAdmissible(String),

    #[error("presentation error: {0}")]
    Presentation(String),

    #[error("not a two-sided ideal")]
    NotIdeal,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("representation-infinite suspected: {0}")]
    RepresentationInfinite(String),

    #[error("algebra is not self-injective")]
    NotSelfInjective,

    #[error("algebra is not Nakayama")]
    NotNakayama,

    #[error("direct sum splitting failed after retry budget")]
    SplittingFailure,

    #[error("internal consistency error: {0}")]
    Internal(String),
}
