//! Inequalities `Δ_{I,I} Δ_{Ī,Ī} ≤ Δ_{J,J} Δ_{J̄,J̄}` between products of
//! complementary principal minors of totally nonnegative matrices.
//!
//! Two equivalent criteria decide the order: inclusion of subsets of the
//! Temperley–Lieb basis, and refinement of the set partitions read off a
//! lattice walk.

mod lattice;
mod poset;
mod tl;

pub use lattice::{lattice_partition, SetPartition};
pub use poset::{poset, poset_with, Inequality, Poset, PosetNode, DEFAULT_POSET_BOUND};
pub use tl::{tl_basis, tl_subset, Endpoint, TlDiagram};

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::exact::{minor, IndexSet, Matrix, MatrixError, Rat};
use crate::network::{NetworkError, PlanarNetwork};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IneqError {
    #[error("colorings of sizes {0} and {1} cannot be compared")]
    SizeMismatch(usize, usize),
    #[error("n must be at least 1")]
    EmptyOrder,
    #[error("n = {n} exceeds the bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("unknown method '{0}' (expected tl or lattice)")]
    UnknownMethod(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// A splitting of `[n]` into `I` (one color) and its complement `Ī`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    n: usize,
    set: IndexSet,
}

impl Coloring {
    pub fn new(n: usize, set: IndexSet) -> Result<Self, IneqError> {
        if n == 0 {
            return Err(IneqError::EmptyOrder);
        }
        set.check_bound(n)
            .map_err(|_| IneqError::InvalidColoring(format!("{set} is not a subset of [{n}]")))?;
        Ok(Coloring { n, set })
    }

    /// `I` from 1-based indices; panics on invalid input. For literals.
    pub fn of(n: usize, indices: &[usize]) -> Self {
        let set = IndexSet::from_unsorted(indices.to_vec()).expect("valid index set");
        Self::new(n, set).expect("valid coloring")
    }

    /// All `2^n` colorings, ordered by the subset `I` as a bit mask.
    pub fn all(n: usize) -> Vec<Coloring> {
        (0u64..1 << n)
            .map(|mask| {
                let set = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                Coloring {
                    n,
                    set: IndexSet::new(set).expect("increasing"),
                }
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &IndexSet {
        &self.set
    }

    pub fn complement(&self) -> Coloring {
        Coloring {
            n: self.n,
            set: self.set.complement(self.n),
        }
    }

    /// Whether `i` (1-based) has the color of `I`.
    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    /// Of `I` and `Ī`, the one containing 1. Both give the same product.
    pub fn canonical(&self) -> Coloring {
        if self.contains(1) {
            self.clone()
        } else {
            self.complement()
        }
    }

    /// `Δ_{I,I} Δ_{Ī,Ī}` evaluated on `m`.
    pub fn product_on(&self, m: &Matrix) -> Result<Rat, IneqError> {
        if !m.is_square() || m.rows() != self.n {
            return Err(IneqError::SizeMismatch(self.n, m.rows()));
        }
        let bar = self.set.complement(self.n);
        Ok(minor(m, &self.set, &self.set)? * minor(m, &bar, &bar)?)
    }
}

/// `Δ{1,3}Δ{2}` style label, with `∅` for the empty set.
impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |s: &IndexSet| {
            if s.is_empty() {
                "∅".to_string()
            } else {
                s.to_string()
            }
        };
        write!(f, "Δ{}Δ{}", label(&self.set), label(&self.complement().set))
    }
}

/// Which criterion decides the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    TemperleyLieb,
    Lattice,
}

impl std::str::FromStr for Method {
    type Err = IneqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tl" => Ok(Method::TemperleyLieb),
            "lattice" => Ok(Method::Lattice),
            other => Err(IneqError::UnknownMethod(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "≤",
            Relation::Greater => "≥",
            Relation::Equal => "=",
            Relation::Incomparable => "incomparable",
        })
    }
}

fn relation_from(le: bool, ge: bool) -> Relation {
    match (le, ge) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::Less,
        (false, true) => Relation::Greater,
        (false, false) => Relation::Incomparable,
    }
}

/// Order key of a coloring under one criterion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Key {
    Tl(BTreeSet<usize>),
    Lattice(SetPartition),
}

impl Key {
    pub(crate) fn of(c: &Coloring, method: Method, basis: &[TlDiagram]) -> Key {
        match method {
            Method::TemperleyLieb => Key::Tl(
                basis
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| d.allowed_by(c))
                    .map(|(i, _)| i)
                    .collect(),
            ),
            Method::Lattice => Key::Lattice(lattice_partition(c)),
        }
    }

    pub(crate) fn le(&self, other: &Key) -> bool {
        match (self, other) {
            (Key::Tl(a), Key::Tl(b)) => a.is_subset(b),
            (Key::Lattice(a), Key::Lattice(b)) => a.refines(b),
            _ => false,
        }
    }
}

/// How `Δ_{I,I}Δ_{Ī,Ī}` compares with `Δ_{J,J}Δ_{J̄,J̄}` on all totally
/// nonnegative matrices.
pub fn compare(c1: &Coloring, c2: &Coloring, method: Method) -> Result<Relation, IneqError> {
    if c1.n != c2.n {
        return Err(IneqError::SizeMismatch(c1.n, c2.n));
    }
    let basis = match method {
        Method::TemperleyLieb => tl_basis(c1.n),
        Method::Lattice => Vec::new(),
    };
    let (a, b) = (Key::of(c1, method, &basis), Key::of(c2, method, &basis));
    Ok(relation_from(a.le(&b), b.le(&a)))
}

/// Whether `Δ_{I,I}Δ_{Ī,Ī} ≤ Δ_{J,J}Δ_{J̄,J̄}` holds on `m`.
pub fn verify_inequality_on(m: &Matrix, c1: &Coloring, c2: &Coloring) -> Result<bool, IneqError> {
    Ok(c1.product_on(m)? <= c2.product_on(m)?)
}

/// Total weight of the families of `n` paths, path `i` joining source `i`
/// to sink `i`, in which paths of the same color never share a vertex.
/// Families are enumerated explicitly for each color class.
pub fn two_colored_family_weight(net: &PlanarNetwork, c: &Coloring) -> Result<Rat, IneqError> {
    if net.order != c.n {
        return Err(IneqError::SizeMismatch(c.n, net.order));
    }
    let mut total = Rat::one();
    for part in [c.set.clone(), c.set.complement(c.n)] {
        total *= net.disjoint_family_weight(&part, &part)?;
    }
    Ok(total)
}
