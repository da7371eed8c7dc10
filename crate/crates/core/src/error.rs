use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree exceeds mirror order: degree {degree} > {order}")]
    MirrorOrder { degree: usize, order: usize },

    #[error("non-integral value: {what}")]
    NonIntegral { what: String },

    #[error("enumeration size guard: {what} requested for d={d}, limit is {limit}")]
    Guard {
        what: &'static str,
        d: usize,
        limit: usize,
    },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("partition is not noncrossing: {0}")]
    Crossing(String),

    #[error("invalid interval family: {0}")]
    InvalidFamily(String),

    #[error("ground set mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        allowed: String,
    },

    #[error("inconsistent f-vector: Euler check failed (h_(d+1) = {got}, expected {expected})")]
    EulerCheck { got: String, expected: String },

    #[error("h-vector not realizable as integer f-vector: {0}")]
    NotRealizable(String),

    #[error(
        "invalid shelling type (i,j)=({i},{j}) for d={d}: need (0,0), (0,d), or 1<=i and i+j<=d"
    )]
    InvalidType { d: usize, i: usize, j: usize },

    #[error("invalid c-vector: {0}")]
    InvalidCVector(String),

    #[error("invalid face complex: {0}")]
    InvalidComplex(String),

    #[error("face {face} is not a combinatorial cube: {reason}")]
    NotCube { face: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
