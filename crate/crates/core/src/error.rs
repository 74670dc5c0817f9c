use thiserror::Error;

use crate::exact::MatrixError;
use crate::ineq::IneqError;
use crate::network::NetworkError;
use crate::poly::PolyError;
use crate::roots::RootsError;
use crate::symfunc::SymError;
use crate::tableau::TableauError;

/// Any error raised by the library, tagged by the subsystem it came from.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Ineq(#[from] IneqError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Roots(#[from] RootsError),
}
