use thiserror::Error;

/// Errors produced by the core constructions.
///
/// Law *violations* are not errors: checkers collect those into reports.
/// An `Error` means a construction was handed structurally incompatible
/// data (mismatched objects, mixed instances, a failed universal-property
/// hypothesis, ...).
#[derive(Debug, Error)]
pub enum Error {
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("mixed base-category instances: {0}")]
    InstanceMismatch(String),
    #[error("scalar field mismatch: {0}")]
    FieldMismatch(String),
    #[error("morphisms are not parallel: {0}")]
    NotParallel(String),
    #[error("morphism is not mono: {0}")]
    NotMono(String),
    #[error("factorization failed: {0}")]
    Factorization(String),
    #[error("morphism is not invertible: {0}")]
    NotInvertible(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid construction: {0}")]
    Invalid(String),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("label collision under tensor flattening: {0}")]
    LabelCollision(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
