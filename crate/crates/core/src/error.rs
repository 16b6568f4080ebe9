use thiserror::Error;

/// Errors raised by state construction and invariant evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected {expected} amplitudes, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("all amplitudes are zero")]
    ZeroVector,
    #[error("root multiset is empty")]
    EmptyRoots,
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("root finder did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("projective pair (0, 0) is not a point")]
    InvalidPoint,
    #[error("vector is not of unit length (|v|^2 = {0})")]
    NonUnitVector(f64),
    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("divergent: {0}")]
    Divergent(String),
    #[error("parameters outside the ILO domain: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("Mobius matrix is singular")]
    SingularMobius,
    #[error("state is not normalized (norm^2 = {0})")]
    Unnormalized(f64),
    #[error("invalid qubit index set {0:?}")]
    BadIndexSet(Vec<usize>),
}

pub type Result<T> = std::result::Result<T, Error>;
