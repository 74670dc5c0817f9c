use num_traits::{One, Signed};

use super::matrix::det_in_place;
use super::{IndexSet, Matrix, MatrixError, Rat};

/// Largest dimension accepted by the exhaustive minor enumerations.
pub const DEFAULT_SIZE_LIMIT: usize = 8;

/// The minor `det M[I, J]`. The empty minor is 1.
pub fn minor(m: &Matrix, rows: &IndexSet, cols: &IndexSet) -> Result<Rat, MatrixError> {
    if rows.len() != cols.len() {
        return Err(MatrixError::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    rows.check_bound(m.rows())?;
    cols.check_bound(m.cols())?;
    if rows.is_empty() {
        return Ok(Rat::one());
    }
    let grid = rows
        .iter()
        .map(|i| cols.iter().map(|j| m.get(i - 1, j - 1).clone()).collect())
        .collect();
    Ok(det_in_place(grid))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub value: Rat,
}

/// Outcome of an exhaustive sign test over all square minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorTest {
    /// Every nonempty minor passed; `minors_checked` counts them.
    Holds { minors_checked: usize },
    /// First failing minor in (size, rows, columns) lexicographic order.
    Fails(MinorWitness),
}

impl MinorTest {
    pub fn holds(&self) -> bool {
        matches!(self, MinorTest::Holds { .. })
    }

    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            MinorTest::Fails(w) => Some(w),
            MinorTest::Holds { .. } => None,
        }
    }
}

/// Checks every square minor of `m` (of any shape) against `>= 0`, or `> 0`
/// when `strict`. Errors when `max(rows, cols) > size_limit`.
pub fn positivity_test(m: &Matrix, strict: bool, size_limit: usize) -> Result<MinorTest, MatrixError> {
    let size = m.rows().max(m.cols());
    if size > size_limit {
        return Err(MatrixError::TooLarge {
            size,
            limit: size_limit,
        });
    }
    let mut checked = 0;
    for k in 1..=m.rows().min(m.cols()) {
        let row_sets = IndexSet::subsets(m.rows(), k);
        let col_sets = IndexSet::subsets(m.cols(), k);
        for rows in &row_sets {
            for cols in &col_sets {
                let value = minor(m, rows, cols)?;
                let bad = if strict {
                    !value.is_positive()
                } else {
                    value.is_negative()
                };
                if bad {
                    return Ok(MinorTest::Fails(MinorWitness {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        value,
                    }));
                }
                checked += 1;
            }
        }
    }
    Ok(MinorTest::Holds {
        minors_checked: checked,
    })
}

pub fn is_totally_nonnegative(m: &Matrix) -> Result<MinorTest, MatrixError> {
    positivity_test(m, false, DEFAULT_SIZE_LIMIT)
}

pub fn is_totally_positive(m: &Matrix) -> Result<MinorTest, MatrixError> {
    positivity_test(m, true, DEFAULT_SIZE_LIMIT)
}

/// The `k`-th exterior power: the `C(n,k) x C(n,k)` matrix of `k x k` minors,
/// rows and columns indexed by `k`-subsets in lexicographic order.
pub fn exterior_power(m: &Matrix, k: usize) -> Result<Matrix, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if k == 0 || k > n {
        return Err(MatrixError::PowerOutOfRange { k, n });
    }
    let subsets = IndexSet::subsets(n, k);
    let mut data = Vec::with_capacity(subsets.len() * subsets.len());
    for rows in &subsets {
        for cols in &subsets {
            data.push(minor(m, rows, cols)?);
        }
    }
    Matrix::new(subsets.len(), subsets.len(), data)
}
