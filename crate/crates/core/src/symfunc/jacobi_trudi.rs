//! Matrices of complete homogeneous symmetric functions.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::exact::{IndexSet, MatrixError, Rat};
use crate::tableau::{Partition, SkewShape};

use super::{Basis, SymFn};

/// A square or rectangular matrix whose entries are `h_k`, stored by the
/// index `k`; `h_0 = 1` and `h_k = 0` for `k < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HMatrix {
    rows: Vec<Vec<i64>>,
}

impl HMatrix {
    /// Entry `(i, j)` is `h_{index[i][j]}`.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Dimension("rows of different lengths".into()));
        }
        Ok(HMatrix { rows })
    }

    /// The submatrix of the infinite Toeplitz matrix `H = (h_{c-r})` on the
    /// given row and column labels.
    pub fn from_h_submatrix(rows: &[i64], cols: &[i64]) -> Self {
        HMatrix {
            rows: rows.iter().map(|&r| cols.iter().map(|&c| c - r).collect()).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// The index `k` of the entry `h_k` at 0-based `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// Minor on 1-based row and column sets.
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<SymFn, MatrixError> {
        if rows.len() != cols.len() {
            return Err(MatrixError::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        rows.check_bound(self.nrows())?;
        cols.check_bound(self.ncols())?;
        let sub: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| cols.iter().map(|c| self.rows[r - 1][c - 1]).collect())
            .collect();
        Ok(det(&sub))
    }

    /// The determinant expanded in the `h` basis.
    pub fn determinant(&self) -> Result<SymFn, MatrixError> {
        if self.nrows() != self.ncols() {
            return Err(MatrixError::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        Ok(det(&self.rows))
    }
}

/// Rows separated by newlines, entries `h<k>`, `1` or `0`.
impl fmt::Display for HMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|&k| match k {
                    k if k < 0 => "0".to_string(),
                    0 => "1".to_string(),
                    k => format!("h{k}"),
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The Jacobi–Trudi matrix of `ν/μ`: entry `(i, j)` is
/// `h_{ν_i - μ_j - i + j}`, of size `ℓ(ν)`.
pub fn jacobi_trudi(shape: &SkewShape) -> HMatrix {
    let (nu, mu) = (shape.outer(), shape.inner());
    let k = nu.len();
    let rows = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| nu.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64)
                .collect()
        })
        .collect();
    HMatrix { rows }
}

/// Laplace expansion along the first row, memoized on the set of columns
/// still available.
fn det(m: &[Vec<i64>]) -> SymFn {
    let n = m.len();
    let mut memo = HashMap::new();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    expand(m, 0, full, &mut memo)
}

fn expand(m: &[Vec<i64>], row: usize, cols: u64, memo: &mut HashMap<u64, SymFn>) -> SymFn {
    if row == m.len() {
        return SymFn::one(Basis::H);
    }
    if let Some(done) = memo.get(&cols) {
        return done.clone();
    }
    let mut out = SymFn::zero(Basis::H);
    let mut sign = 1i64;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let k = m[row][j];
        if k >= 0 {
            let rest = expand(m, row + 1, cols & !(1 << j), memo);
            for (shape, c) in rest.terms() {
                let mut parts = shape.parts().to_vec();
                if k > 0 {
                    parts.push(k as usize);
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                }
                out.add_term(
                    Partition::new(parts).expect("sorted parts"),
                    c * Rat::from_integer(sign.into()),
                );
            }
        }
        sign = -sign;
    }
    debug_assert!(out.terms().values().all(|c| !c.is_zero()));
    memo.insert(cols, out.clone());
    out
}
