//! Exact computations around totally nonnegative matrices.
//!
//! The crate is organised by subject:
//!
//! - [`exact`]: rational matrices, minors, total nonnegativity tests,
//!   exterior powers, Neville factorization and characteristic polynomials.
//! - [`network`]: weighted planar networks, their weight matrices and
//!   vertex-disjoint path families.
//! - [`tableau`]: partitions, skew shapes, Young tableaux and jeu de taquin.
//! - [`symfunc`]: symmetric functions in the e/h/p/m/s bases,
//!   Littlewood–Richardson products and Jacobi–Trudi determinants.
//! - [`ineq`]: products of complementary principal minors compared through
//!   Temperley–Lieb diagrams and lattice walks.
//! - [`roots`]: real-rootedness certificates (Hankel, Toeplitz) and Sturm
//!   sequences.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod error;
pub mod exact;
pub mod ineq;
pub mod network;
pub mod poly;
pub mod random;
pub mod roots;
pub mod symfunc;
pub mod tableau;

pub use error::Error;
pub use exact::{IndexSet, Matrix, Rat};
pub use network::PlanarNetwork;
pub use poly::Poly;
pub use symfunc::{Basis, SymFn};
pub use tableau::{Partition, SkewShape, Tableau};
