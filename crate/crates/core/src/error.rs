use thiserror::Error;

/// Errors returned by the constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("partition {inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<usize>, outer: Vec<usize> },
    #[error("partition {parts:?} does not fit inside ({cols})^({rows}) for a {m}x{n} ambient box", cols = .n.saturating_sub(1), rows = .m.saturating_sub(1))]
    OutOfAmbient { parts: Vec<usize>, m: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is not square ({m}x{n})")]
    NotSquare { m: usize, n: usize },
    #[error("matrix is not a partial alternating sign matrix")]
    NotPasm,
    #[error("point does not satisfy the inequality system of the polytope")]
    OutsidePolytope,
    #[error("point is not order preserving on the poset")]
    NotMonotone,
    #[error("no value given for element {0:?}")]
    MissingValue((usize, usize)),
    #[error("flow has no value for edge {0}")]
    MissingEdgeValue(usize),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("t must be a positive integer")]
    NonPositiveT,
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("expected an integer, found {0}")]
    NotIntegral(String),
    #[error("embedding is not planar: {0}")]
    NotPlanar(String),
    #[error("cannot parse {0:?} as an exact rational")]
    ParseRational(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
