//! Symmetric functions over the rationals.
//!
//! A [`SymFn`] is a finite linear combination of basis elements `b_λ` for
//! one of the classical bases. All arithmetic goes through a
//! [`SymAlgebra`], which fixes the degree bound and caches the transition
//! matrices; the Schur basis is the internal hub, and products use
//! Littlewood–Richardson coefficients.

mod algebra;
mod jacobi_trudi;
mod kostka;
mod lr;
mod monomial;
mod parse;

pub use algebra::{SchurPositivity, SymAlgebra, DEFAULT_DEGREE_BOUND};
pub use jacobi_trudi::{jacobi_trudi, HMatrix};
pub use kostka::{character, kostka_number};
pub use lr::{lr_multiply, lr_tableaux, skew_schur_expand, LrCoefficients};
pub use monomial::{monomial_expansion, monomial_expansion_with_cap, MultiPoly, DEFAULT_MONOMIAL_CAP};

use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::Rat;
use crate::tableau::{Partition, TableauError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Elementary `e_λ = e_λ1 e_λ2 ...`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Power sums `p_λ`.
    P,
    /// Monomial `m_λ`.
    M,
    /// Schur `s_λ`.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::E, Basis::H, Basis::P, Basis::M, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.letter() == c)
    }
}

impl FromStr for Basis {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.trim().chars();
        match (chars.next().and_then(Basis::from_letter), chars.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(SymError::UnknownBasis(s.to_string())),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("unknown basis '{0}'")]
    UnknownBasis(String),
    #[error("skew shapes are only available for Schur functions")]
    SkewOutsideSchur,
    #[error("expression error: {0}")]
    Parse(String),
    #[error("more than {0} monomials; raise the cap to continue")]
    TooManyMonomials(usize),
    #[error("at least one variable is required")]
    NoVariables,
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// `Σ c_λ b_λ` in a single basis; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFn {
    basis: Basis,
    terms: BTreeMap<Partition, Rat>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        SymFn {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::element(basis, Partition::empty())
    }

    pub fn element(basis: Basis, shape: Partition) -> Self {
        Self::from_terms(basis, [(shape, Rat::one())])
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rat)>) -> Self {
        let mut f = Self::zero(basis);
        for (shape, c) in terms {
            f.add_term(shape, c);
        }
        f
    }

    /// Integer coefficients given as `(parts, coefficient)`; panics on an
    /// invalid partition. Meant for literals in tests and examples.
    pub fn from_int_terms(basis: Basis, terms: &[(&[usize], i64)]) -> Self {
        Self::from_terms(
            basis,
            terms.iter().map(|(parts, c)| {
                (
                    Partition::new(parts.to_vec()).expect("valid partition literal"),
                    Rat::from_integer((*c).into()),
                )
            }),
        )
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn coeff(&self, shape: &Partition) -> Rat {
        self.terms.get(shape).cloned().unwrap_or_else(Rat::zero)
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

    /// Largest `|λ|` with a nonzero coefficient (0 for the zero function).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, shape: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(shape) {
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

    pub fn scale(&self, c: &Rat) -> SymFn {
        SymFn::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Terms in output order: larger `|λ|` first, then lexicographically
    /// decreasing.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Rat)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by_key(|(k, _)| (Reverse(k.size()), Reverse(*k)));
        out
    }
}

/// One term per line, `coef * b[parts]`, in [`SymFn::sorted_terms`] order;
/// the zero function prints as `0`.
impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (shape, c) in self.sorted_terms() {
            writeln!(f, "{c} * {}[{shape}]", self.basis)?;
        }
        Ok(())
    }
}
