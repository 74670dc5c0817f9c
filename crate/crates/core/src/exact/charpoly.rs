use num_traits::Zero;

use super::{Matrix, MatrixError, Rat};
use crate::poly::Poly;

/// `det(zI - M)` by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &Matrix) -> Result<Poly, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    // coeffs[k] multiplies z^k
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::from_integer(1.into());
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        // aux <- M·aux + c_{n-k+1} I
        let mut next = m * &aux;
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, v);
        }
        aux = next;
        let product = m * &aux;
        let trace: Rat = (0..n).map(|i| product.get(i, i).clone()).sum();
        coeffs[n - k] = -trace / Rat::from_integer((k as i64).into());
    }
    Ok(Poly::new(coeffs))
}
