use thiserror::Error;

/// Errors surfaced by problem validation, system construction, solving and
/// certification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("codimension mismatch: conditions sum to {actual}, space dimension is {required}")]
    CodimensionMismatch { actual: usize, required: usize },

    #[error("conditions live on different spaces")]
    SpaceMismatch,

    #[error("invalid Schubert condition: {0}")]
    InvalidCondition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("infeasible condition pair: alpha_i + beta_(l+1-i) < n+1 at row {row}")]
    InfeasiblePair { row: usize },

    #[error("value vector has length {got}, pattern has {expected} variables")]
    LengthMismatch { got: usize, expected: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("flag matrix is singular")]
    SingularFlag,

    #[error("flags are not an opposite pair (expected Phi and w0*Phi)")]
    FlagsNotOpposite,

    #[error("general position failure: {0}")]
    GeneralPosition(String),

    #[error("requested reduction is not applicable: {0}")]
    InapplicableReduction(String),

    #[error("formulation precondition failed: {0}")]
    Formulation(String),

    #[error("system is not purely bilinear (contains a determinant of size {size})")]
    NotBilinear { size: usize },

    #[error("singular Jacobian encountered")]
    SingularJacobian,

    #[error("Bezout path count {paths} exceeds ceiling {ceiling}; rerun with --force to override")]
    BezoutCeilingExceeded { paths: u128, ceiling: u128 },

    #[error("too many path failures: {failed} of {total} paths")]
    ExcessivePathFailures { failed: usize, total: usize },

    #[error("system does not have real coefficients")]
    NotRealSystem,

    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    #[error("document error: {0}")]
    Document(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
