use thiserror::Error;

/// Errors raised by the algebra and monodromy layers.
///
/// Positions in a star (`row`, `k`, `index`) are 1-based, matching the
/// numbering of the generators around the base point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("scalar {0} is not an element of {1}")]
    InvalidScalar(String, String),
    #[error("homomorphism is not well defined: {0}")]
    NotWellDefined(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("diagonal block of row {row} is not an automorphism")]
    DiagonalBlockNotInvertible { row: usize },
    #[error("operator admits no block-row factorization: diagonal block {k} is not invertible")]
    NotRealizable { k: usize },
    #[error("torsion present: duality needs torsion-free coefficients")]
    TorsionPresent,
    #[error("field coefficients required for {0}")]
    FieldRequired(String),
    #[error("Seifert form is degenerate")]
    DegenerateSeifertForm,
    #[error("inconsistent critical value datum {index}: {reason}")]
    InconsistentData { index: usize, reason: String },
    #[error("malformed instance: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
