use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("gram matrix is not symmetric at entry ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("gram matrix is degenerate")]
    Degenerate,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix does not preserve the form: entry ({row}, {col}) of M^T G M is {found}, expected {expected}")]
    NotIsometry {
        row: usize,
        col: usize,
        found: BigInt,
        expected: BigInt,
    },

    #[error("isometries act on different lattices")]
    LatticeMismatch,

    #[error("isometry is neither an involution nor the identity")]
    NotInvolution,

    #[error("expected a lattice of signature {expected}, got {actual}")]
    SignatureMismatch { expected: String, actual: String },

    #[error("inconsistent with odd fixed-point data: {0}")]
    FixedPointData(String),

    #[error("signature {0} is odd")]
    OddSignature(i64),

    #[error("enumeration undefined: form not definite")]
    NotDefinite,

    #[error("target {target} has the wrong sign for this form")]
    TargetSign { target: BigInt },

    #[error("plane is not positive definite")]
    PlaneNotPositive,

    #[error("plane basis is invalid: {0}")]
    InvalidPlane(String),

    #[error("vector has self-pairing {0}, expected -2")]
    NotRoot(BigInt),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}
