use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),

    #[error("dimension must be at least 1")]
    InvalidDimension,

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u32, modulus: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("carrier of size {size} exceeds the bound {bound}")]
    CapacityExceeded { size: u128, bound: usize },

    #[error("malformed operation tables: {0}")]
    ShapeError(String),

    #[error("table entry {value} out of range for a carrier of size {size}")]
    IndexOutOfRange { value: usize, size: usize },

    #[error("form matrix is not antisymmetric with zero diagonal")]
    NotAntisymmetric,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("crossing {0} must appear exactly once over and once under")]
    UnmatchedCrossing(u32),

    #[error("over and under tokens of crossing {0} carry different signs")]
    SignMismatch(u32),

    #[error("unknown built-in link `{0}`")]
    UnknownLink(String),
}

pub type Result<T> = std::result::Result<T, Error>;
