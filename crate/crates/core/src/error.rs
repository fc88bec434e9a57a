use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CkError {
    /// A tangent was requested where its cosine vanishes.
    #[error("pole: cosine {cos:e} is below the pole tolerance")]
    Pole { cos: f64 },

    /// A (cosine, sine) pair does not satisfy C² + κS² = 1.
    #[error("pair off the unit conic (defect {defect:e})")]
    Constraint { defect: f64 },

    /// The quadrant of a negative label has no real value.
    #[error("the quadrant of a negative label is only formal")]
    FormalOnly,

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// A side is not of the first kind (space-like, isotropic or reversed).
    #[error("not a first-kind side: {0}")]
    Kind(String),

    #[error("no such triangle: {0}")]
    Existence(String),

    #[error("outside the admissible range: {0}")]
    Range(String),

    /// The data fix the triangle only up to a surviving relation.
    #[error("underdetermined; surviving constraint: {constraint}")]
    Underdetermined { constraint: String },

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("holonomy extraction failed: {0}")]
    Extraction(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, CkError>;
