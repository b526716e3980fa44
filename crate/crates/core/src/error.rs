use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization point v = {point} is a pole")]
    Pole { point: String },
    #[error("cannot specialize at v = 0")]
    ZeroPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("word of degree {degree} exceeds the completion bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("operands live in different exterior algebras")]
    AlgebraMismatch,
    #[error("element is not in the Levi subalgebra: {witness}")]
    NotLevi { witness: String },
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
