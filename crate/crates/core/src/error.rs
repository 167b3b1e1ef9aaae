//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by matrix construction, structure checks and transforms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Matrix dimensions must both be positive.
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },

    /// Data buffer does not match the requested dimensions.
    #[error("data length {len} does not match {rows}x{cols}")]
    DataLength { rows: usize, cols: usize, len: usize },

    /// A stored entry is NaN or infinite.
    #[error("non-finite entry at flat index {index}")]
    NonFinite { index: usize },

    /// Matrix shapes do not conform for multiplication.
    #[error("cannot multiply {lhs_rows}x{lhs_cols} by {rhs_rows}x{rhs_cols}")]
    MatmulShape {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// A square matrix was required.
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Level dimensions must be a non-empty list of positive integers.
    #[error("level dimensions must be non-empty and positive")]
    EmptyOrZeroLevelDims,

    /// Matrix side does not match the product of the level dimensions.
    #[error("matrix side {side} does not match level product {expected}")]
    SideMismatch { side: usize, expected: usize },

    /// Coefficient buffer does not cover the offset hyper-rectangle exactly.
    #[error("coefficient count {len} does not match expected {expected}")]
    CoeffLength { expected: usize, len: usize },

    /// A level index was outside `1..=p`.
    #[error("level {level} out of range 1..={levels}")]
    LevelOutOfRange { level: usize, levels: usize },

    /// An operation defined only for 1-level matrices received more levels.
    #[error("operation requires a 1-level matrix, got {levels} levels")]
    OneLevelOnly { levels: usize },

    /// Operand shape does not conform to the transform being applied.
    #[error("operand is {rows}x{cols} but the transform side is {side}")]
    ApplyShape { rows: usize, cols: usize, side: usize },

    /// A dense matrix is not Toeplitz at the given offset vector.
    #[error("not Toeplitz at offset {offset:?}: defect {defect:e}")]
    NotToeplitz { offset: Vec<i64>, defect: f64 },

    /// The matrix side is not a power of two.
    #[error("matrix side {side} is not a power of two (with positive exponent)")]
    NotPowerOfTwo { side: usize },

    /// The matrix is not complex symmetric.
    #[error("matrix is not symmetric: defect {defect:e}")]
    NotSymmetric { defect: f64 },

    /// A level's anti-diagonals are not constant.
    #[error("anti-diagonals not constant at level {level}: defect {defect:e}")]
    NotConstantAntidiagonal { level: usize, defect: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
