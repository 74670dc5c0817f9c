//! Bidiagonal factorization of invertible totally nonnegative matrices by
//! Neville elimination.
//!
//! Rows are eliminated column by column using the adjacent row above
//! (bottom to top inside a column), which leaves an upper triangular matrix
//! `R`. The same procedure on columns reduces `R` to a positive diagonal.
//! Inverting the elementary operations gives
//!
//! ```text
//! M = L_1 ... L_p · D · U_1 ... U_q
//! ```
//!
//! with `L_i = I + c E_{j+1,j}`, `U_i = I + c E_{j,j+1}` and `c > 0`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Matrix, MatrixError, Rat};

/// `I + value · E_{row,col}` (1-based), with `|row - col| = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryFactor {
    pub row: usize,
    pub col: usize,
    #[serde(with = "crate::exact::serde_rat")]
    pub value: Rat,
}

impl ElementaryFactor {
    pub fn is_lower(&self) -> bool {
        self.row == self.col + 1
    }

    pub fn matrix(&self, n: usize) -> Matrix {
        let mut m = Matrix::identity(n);
        m.set(self.row - 1, self.col - 1, self.value.clone());
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NevilleFactorization {
    pub n: usize,
    pub lower: Vec<ElementaryFactor>,
    #[serde(with = "crate::exact::serde_rat_vec")]
    pub diagonal: Vec<Rat>,
    pub upper: Vec<ElementaryFactor>,
}

impl NevilleFactorization {
    /// All factors in multiplication order.
    pub fn factors(&self) -> Vec<Matrix> {
        let mut out: Vec<Matrix> = self.lower.iter().map(|f| f.matrix(self.n)).collect();
        out.push(Matrix::diagonal(&self.diagonal));
        out.extend(self.upper.iter().map(|f| f.matrix(self.n)));
        out
    }

    pub fn lower_product(&self) -> Matrix {
        product(self.n, self.lower.iter().map(|f| f.matrix(self.n)))
    }

    pub fn upper_product(&self) -> Matrix {
        product(self.n, self.upper.iter().map(|f| f.matrix(self.n)))
    }

    /// Exact product of all factors; equals the factored matrix.
    pub fn product(&self) -> Matrix {
        product(self.n, self.factors())
    }
}

fn product(n: usize, factors: impl IntoIterator<Item = Matrix>) -> Matrix {
    factors.into_iter().fold(Matrix::identity(n), |acc, f| &acc * &f)
}

pub fn neville_factorize(m: &Matrix) -> Result<NevilleFactorization, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.determinant()?.is_zero() {
        return Err(MatrixError::Singular);
    }
    let n = m.rows();
    let mut a = m.to_rows();

    let mut lower = Vec::new();
    for k in 0..n.saturating_sub(1) {
        for i in (k + 1..n).rev() {
            let Some(c) = multiplier(&a[i][k], &a[i - 1][k], (i + 1, k + 1))? else {
                continue;
            };
            for j in k..n {
                let delta = &c * &a[i - 1][j];
                a[i][j] -= delta;
            }
            lower.push(ElementaryFactor {
                row: i + 1,
                col: i,
                value: c,
            });
        }
    }

    // `a` is now upper triangular; reduce its rows with column operations
    let mut column_ops = Vec::new();
    for k in 0..n.saturating_sub(1) {
        for j in (k + 1..n).rev() {
            let Some(c) = multiplier(&a[k][j], &a[k][j - 1], (k + 1, j + 1))? else {
                continue;
            };
            for row in a.iter_mut().take(j + 1) {
                let delta = &c * &row[j - 1];
                row[j] -= delta;
            }
            column_ops.push(ElementaryFactor {
                row: j,
                col: j + 1,
                value: c,
            });
        }
    }
    column_ops.reverse();

    let diagonal: Vec<Rat> = (0..n).map(|i| a[i][i].clone()).collect();
    if let Some(i) = diagonal.iter().position(|d| !d.is_positive()) {
        return Err(MatrixError::NotTnn(format!(
            "pivot {} at position {} is not positive",
            diagonal[i],
            i + 1
        )));
    }
    Ok(NevilleFactorization {
        n,
        lower,
        diagonal,
        upper: column_ops,
    })
}

/// Multiplier eliminating `target` with `pivot`; `None` when nothing to do.
fn multiplier(target: &Rat, pivot: &Rat, at: (usize, usize)) -> Result<Option<Rat>, MatrixError> {
    if target.is_zero() {
        return Ok(None);
    }
    if pivot.is_zero() {
        return Err(MatrixError::NotTnn(format!(
            "nonzero entry at ({}, {}) next to a zero pivot",
            at.0, at.1
        )));
    }
    let c = target / pivot;
    if c.is_negative() {
        return Err(MatrixError::NotTnn(format!(
            "negative multiplier {c} at ({}, {})",
            at.0, at.1
        )));
    }
    Ok(Some(c))
}
