//! Exact rational dense linear algebra.

mod charpoly;
mod index_set;
mod matrix;
mod minors;
mod neville;
mod rat;

pub use charpoly::char_poly;
pub use index_set::IndexSet;
pub use matrix::Matrix;
pub use minors::{
    exterior_power, is_totally_nonnegative, is_totally_positive, minor, positivity_test, MinorTest, MinorWitness,
    DEFAULT_SIZE_LIMIT,
};
pub use neville::{neville_factorize, ElementaryFactor, NevilleFactorization};
pub use rat::{parse_rat, rat, ratio, serde_rat, serde_rat_vec, Rat};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index sets have different sizes ({rows} rows, {cols} columns)")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("exterior power k={k} out of range 1..={n}")]
    PowerOutOfRange { k: usize, n: usize },
    #[error("matrix size {size} exceeds the exhaustive minor limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not totally nonnegative: {0}")]
    NotTnn(String),
    #[error("parse error: {0}")]
    Parse(String),
}
