use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("polynomial is not exactly divisible by the divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NonSquare { rows: usize, row: usize, cols: usize },

    #[error("variable {var} carries a negative exponent but is graded")]
    NegativeExponentInGrading { var: usize },

    #[error("length mismatch: expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("unsupported number of variables: {0}")]
    UnsupportedArity(usize),

    #[error("result has non-integer coefficients")]
    NonIntegerResult,

    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
