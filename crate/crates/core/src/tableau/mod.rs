//! Partitions, skew shapes, Young tableaux and jeu de taquin.
//!
//! Cells are addressed `(row, column)`, 1-based, with row 1 on top.

mod enumerate;
mod jdt;
mod partition;
mod shape;
#[allow(clippy::module_inception)]
mod tableau;

pub use enumerate::{enumerate_ssyt, enumerate_ssyt_with_cap, standard_tableaux, DEFAULT_TABLEAU_CAP};
pub use partition::Partition;
pub use shape::SkewShape;
pub use tableau::Tableau;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {inner} does not fit inside {outer}")]
    NotContained { outer: String, inner: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} needs {expected} entries, found {found}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("tableau entries must be positive")]
    ZeroEntry,
    #[error("tableau is not standard")]
    NotStandard,
    #[error("({row}, {col}) is not an inner corner")]
    NotInnerCorner { row: usize, col: usize },
    #[error("column {j} out of range 1..={cols}")]
    ColumnOutOfRange { j: usize, cols: usize },
    #[error("more than {0} tableaux; raise the cap to continue")]
    TooMany(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
