//! Symmetric functions evaluated in finitely many variables.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::Rat;
use crate::tableau::{enumerate_ssyt_with_cap, Partition, SkewShape, TableauError};

use super::{Basis, SymError, SymFn};

/// Default bound on the number of monomials in any intermediate result.
pub const DEFAULT_MONOMIAL_CAP: usize = 1_000_000;

/// A polynomial in `x_1, ..., x_n`, keyed by exponent vectors of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], Rat::one());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rat {
        self.terms.get(exponents).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c x^exponents`. Panics if the exponent vector has the wrong
    /// length.
    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rat) {
        assert_eq!(exponents.len(), self.n_vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        let mut out = Self::zero(self.n_vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Product, failing once the result would hold more than `cap` terms.
    pub fn mul(&self, other: &MultiPoly, cap: usize) -> Result<MultiPoly, SymError> {
        let mut out = Self::zero(self.n_vars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
                if out.len() > cap {
                    return Err(SymError::TooManyMonomials(cap));
                }
            }
        }
        Ok(out)
    }
}

/// Terms in decreasing exponent order, e.g. `2*x1^2*x3 + x2 - 1/2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{p}", i + 1)
                    }
                })
                .collect();
            let negative = *c < Rat::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `f(x_1, ..., x_n)`, computed from the definition of each basis element.
pub fn monomial_expansion(f: &SymFn, n_vars: usize) -> Result<MultiPoly, SymError> {
    monomial_expansion_with_cap(f, n_vars, DEFAULT_MONOMIAL_CAP)
}

pub fn monomial_expansion_with_cap(f: &SymFn, n_vars: usize, cap: usize) -> Result<MultiPoly, SymError> {
    if n_vars == 0 {
        return Err(SymError::NoVariables);
    }
    let mut out = MultiPoly::zero(n_vars);
    for (shape, c) in f.terms() {
        let term = element(f.basis(), shape, n_vars, cap)?;
        out = out.add(&term.scale(c));
        if out.len() > cap {
            return Err(SymError::TooManyMonomials(cap));
        }
    }
    Ok(out)
}

fn element(basis: Basis, shape: &Partition, n: usize, cap: usize) -> Result<MultiPoly, SymError> {
    match basis {
        Basis::S => schur(shape, n, cap),
        Basis::M => Ok(monomial(shape, n)),
        Basis::E | Basis::H | Basis::P => {
            let mut out = MultiPoly::one(n);
            for &k in shape.parts() {
                let factor = match basis {
                    Basis::E => elementary(k, n),
                    Basis::H => complete(k, n),
                    _ => power_sum(k, n),
                };
                out = out.mul(&factor, cap)?;
            }
            Ok(out)
        }
    }
}

/// `Σ_T x^{c(T)}` over semistandard tableaux of shape `λ`.
fn schur(shape: &Partition, n: usize, cap: usize) -> Result<MultiPoly, SymError> {
    let mut out = MultiPoly::zero(n);
    if shape.len() > n {
        return Ok(out);
    }
    let tableaux = enumerate_ssyt_with_cap(&SkewShape::straight(shape.clone()), n, cap).map_err(|e| match e {
        TableauError::TooMany(c) => SymError::TooManyMonomials(c),
        other => other.into(),
    })?;
    for t in tableaux {
        out.add_term(t.content_padded(n).into_iter().map(|v| v as u32).collect(), Rat::one());
    }
    Ok(out)
}

/// `m_λ`: every distinct rearrangement of `λ` padded to `n` entries.
fn monomial(shape: &Partition, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    if shape.len() > n {
        return out;
    }
    let mut e: Vec<u32> = shape.parts().iter().map(|&p| p as u32).collect();
    e.resize(n, 0);
    e.sort_unstable();
    loop {
        out.add_term(e.clone(), Rat::one());
        if !next_permutation(&mut e) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `e_k = Σ_{i_1 < ... < i_k} x_{i_1} ... x_{i_k}`; zero when `k > n`.
fn elementary(k: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    if k > n {
        return out;
    }
    let mut e = vec![0u32; n];
    e[n - k..].iter_mut().for_each(|x| *x = 1);
    loop {
        out.add_term(e.clone(), Rat::one());
        if !next_permutation(&mut e) {
            return out;
        }
    }
}

/// `h_k = Σ_{i_1 ≤ ... ≤ i_k} x_{i_1} ... x_{i_k}`: all exponent vectors of
/// total degree `k`.
fn complete(k: usize, n: usize) -> MultiPoly {
    fn go(k: usize, i: usize, e: &mut Vec<u32>, out: &mut MultiPoly) {
        if i + 1 == e.len() {
            e[i] = k as u32;
            out.add_term(e.clone(), Rat::one());
            return;
        }
        for a in 0..=k {
            e[i] = a as u32;
            go(k - a, i + 1, e, out);
        }
        e[i] = 0;
    }
    let mut out = MultiPoly::zero(n);
    go(k, 0, &mut vec![0; n], &mut out);
    out
}

/// `p_k = x_1^k + ... + x_n^k`.
fn power_sum(k: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = k as u32;
        out.add_term(e, Rat::one());
    }
    out
}
