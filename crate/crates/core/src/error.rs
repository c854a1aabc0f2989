use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient {0} is not in the field")]
    CoefficientNotInField(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("matrix is not invertible")]
    Singular,
    #[error("generator {0} is not a monomial")]
    NotMonomial(String),
    #[error("ideal is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the ideal is zero")]
    ZeroIdeal,
    #[error("cannot eliminate every variable")]
    EliminateAll,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("positive-dimensional intersection (Krull dimension {0})")]
    PositiveDimensional(usize),
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("radical recursion exceeded depth {0}")]
    RecursionLimit(usize),
    #[error("outer projection required: the point lies on the scheme")]
    PointOnScheme,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("infeasible dimension: {0} monomials")]
    Infeasible(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
