//! Real roots of polynomials `a(z) = 1 + a_1 z + ... + a_n z^n`.
//!
//! Writing `a(z) = Π (1 + β_i z)`, the coefficients are `a_i = e_i(β)`.
//! The Hankel matrix of the power sums of the `β_i` is totally positive
//! exactly when the roots are real and distinct. The upper-triangular
//! Toeplitz matrix of the coefficients is totally nonnegative exactly when
//! the roots are real, so a negative minor of a finite truncation refutes
//! real-rootedness. Sturm sequences give an independent count.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{positivity_test, Matrix, MatrixError, MinorTest, MinorWitness, Rat};
use crate::poly::Poly;

/// Largest matrix on which the exhaustive minor searches run.
pub const ROOTS_SIZE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("a(0) must be nonzero")]
    ZeroConstantTerm,
    #[error("degree must be at least 1")]
    Constant,
    #[error("coefficient a_{index} = {value} is not positive")]
    NonPositiveCoefficient { index: usize, value: String },
    #[error("truncation size {m} is smaller than the degree {n}")]
    TruncationTooSmall { m: usize, n: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Coefficients divided by `a(0)`, so that the constant term is 1.
fn normalized(a: &Poly) -> Result<Vec<Rat>, RootsError> {
    if a.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let a0 = a.coeff(0);
    if a0.is_zero() {
        return Err(RootsError::ZeroConstantTerm);
    }
    Ok(a.coeffs().iter().map(|c| c / &a0).collect())
}

fn require_positive(a: &Poly) -> Result<Vec<Rat>, RootsError> {
    let coeffs = normalized(a)?;
    if coeffs.len() < 2 {
        return Err(RootsError::Constant);
    }
    for (index, c) in a.coeffs().iter().enumerate() {
        if !c.is_positive() {
            return Err(RootsError::NonPositiveCoefficient {
                index,
                value: c.to_string(),
            });
        }
    }
    Ok(coeffs)
}

/// `p_1, ..., p_upto` of the `β_i`, from Newton's identities
/// `p_k = Σ_{i<k} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k`.
pub fn power_sums_from_coeffs(a: &Poly, upto: usize) -> Result<Vec<Rat>, RootsError> {
    let e = normalized(a)?;
    let e_at = |i: usize| e.get(i).cloned().unwrap_or_else(Rat::zero);
    let mut p: Vec<Rat> = vec![Rat::zero()];
    for k in 1..=upto {
        let mut s = Rat::zero();
        for i in 1..k {
            let term = e_at(i) * &p[k - i];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        let last = e_at(k) * Rat::from_integer(k.into());
        if k % 2 == 1 {
            s += last;
        } else {
            s -= last;
        }
        p.push(s);
    }
    Ok(p.split_off(1))
}

/// The `n x n` Hankel matrix `P[i][j] = p_{i+j-2}` (1-based) with `p_0 = n`.
pub fn hankel_matrix(a: &Poly) -> Result<Matrix, RootsError> {
    let n = a.degree().ok_or(RootsError::ZeroPolynomial)?;
    if n == 0 {
        return Err(RootsError::Constant);
    }
    let mut p = vec![Rat::from_integer(n.into())];
    p.extend(power_sums_from_coeffs(a, 2 * n - 2)?);
    let rows = (0..n).map(|i| (0..n).map(|j| p[i + j].clone()).collect()).collect();
    Ok(Matrix::from_rows(rows)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    /// Every minor of the Hankel matrix is positive: the roots are real and
    /// distinct.
    Certified { hankel: Matrix, minors_checked: usize },
    /// A non-positive Hankel minor. The roots are not all real, or not
    /// distinct.
    NotCertified { hankel: Matrix, witness: MinorWitness },
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified { .. })
    }

    pub fn hankel(&self) -> &Matrix {
        match self {
            Certification::Certified { hankel, .. } | Certification::NotCertified { hankel, .. } => hankel,
        }
    }
}

/// Certifies real, distinct roots of a polynomial with positive
/// coefficients through total positivity of its Hankel matrix.
pub fn certify_real_distinct(a: &Poly) -> Result<Certification, RootsError> {
    require_positive(a)?;
    let hankel = hankel_matrix(a)?;
    Ok(match positivity_test(&hankel, true, ROOTS_SIZE_LIMIT)? {
        MinorTest::Holds { minors_checked } => Certification::Certified { hankel, minors_checked },
        MinorTest::Fails(witness) => Certification::NotCertified { hankel, witness },
    })
}

/// The `m x m` leading block of the upper-triangular Toeplitz matrix with
/// entries `a_{j-i}` (zero outside `0..=n`), after normalizing `a_0 = 1`.
pub fn toeplitz_matrix(a: &Poly, m: usize) -> Result<Matrix, RootsError> {
    let coeffs = normalized(a)?;
    let at = |k: i64| {
        usize::try_from(k)
            .ok()
            .and_then(|k| coeffs.get(k).cloned())
            .unwrap_or_else(Rat::zero)
    };
    let rows = (0..m)
        .map(|i| (0..m).map(|j| at(j as i64 - i as i64)).collect())
        .collect();
    Ok(Matrix::from_rows(rows)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToeplitzVerdict {
    /// A negative minor: the roots are not all real.
    Refuted(MinorWitness),
    /// No negative minor in this truncation. This proves nothing.
    Inconclusive { minors_checked: usize },
}

impl ToeplitzVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, ToeplitzVerdict::Refuted(_))
    }
}

/// Searches the `m x m` truncation for a negative minor, in order of size,
/// then rows, then columns.
pub fn toeplitz_refute(a: &Poly, m: usize) -> Result<ToeplitzVerdict, RootsError> {
    require_positive(a)?;
    let n = a.degree().unwrap_or(0);
    if m < n {
        return Err(RootsError::TruncationTooSmall { m, n });
    }
    let t = toeplitz_matrix(a, m)?;
    Ok(match positivity_test(&t, false, ROOTS_SIZE_LIMIT)? {
        MinorTest::Holds { minors_checked } => ToeplitzVerdict::Inconclusive { minors_checked },
        MinorTest::Fails(w) => ToeplitzVerdict::Refuted(w),
    })
}

/// Sturm sequence `f, f', -rem(f, f'), ...`, each term reduced to its
/// primitive part; positive scaling does not change the sign changes.
pub fn sturm_sequence(a: &Poly) -> Result<Vec<Poly>, RootsError> {
    if a.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let mut seq = vec![a.primitive()];
    let d = a.derivative();
    if d.is_zero() {
        return Ok(seq);
    }
    seq.push(d.primitive());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            return Ok(seq);
        }
        seq.push((-&r).primitive());
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let nonzero: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign(x: &Rat) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots, by sign changes of the Sturm sequence at
/// `-∞` and `+∞`.
pub fn sturm_real_root_count(a: &Poly) -> Result<usize, RootsError> {
    let seq = sturm_sequence(a)?;
    let at_pos = seq.iter().map(|p| p.leading().map_or(0, sign));
    let at_neg = seq.iter().map(|p| {
        let s = p.leading().map_or(0, sign);
        if p.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    });
    Ok(sign_changes(at_neg) - sign_changes(at_pos))
}

/// Number of real roots counted with multiplicity, from the Sturm counts of
/// the square-free parts.
pub fn real_root_count_with_multiplicity(a: &Poly) -> Result<usize, RootsError> {
    if a.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let mut total = 0;
    for (k, part) in a.square_free_parts().iter().enumerate() {
        total += (k + 1) * sturm_real_root_count(part)?;
    }
    Ok(total)
}

/// Whether every root of `a` is real (with multiplicity). Nonzero constants
/// count as real-rooted.
pub fn all_roots_real(a: &Poly) -> Result<bool, RootsError> {
    Ok(real_root_count_with_multiplicity(a)? == a.degree().ok_or(RootsError::ZeroPolynomial)?)
}
