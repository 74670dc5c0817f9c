//! Standard networks and network composition.
//!
//! Layers are drawn with row `i` at height `n - i`, sources at `x = 0` and
//! sinks at `x = 1`; concatenation glues layers side by side.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::{Edge, NetworkError, PlanarNetwork, Vertex};
use crate::exact::{neville_factorize, ElementaryFactor, Matrix, Rat};

/// Elementary factors of an invertible totally nonnegative matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryKind {
    /// `diag(d_1, ..., d_n)` with every `d_i > 0`.
    Diagonal(Vec<Rat>),
    /// `I + c E_{j+1,j}`.
    Lower { j: usize, c: Rat },
    /// `I + c E_{j,j+1}`.
    Upper { j: usize, c: Rat },
}

fn rat_of(k: usize) -> Rat {
    Rat::from_integer(k.into())
}

/// One layer with horizontal edges `s_i -> t_i` of weight `diag[i]` and the
/// given `(tail row, head row, weight)` diagonals.
fn layer(diag: &[Rat], diagonals: &[(usize, usize, Rat)]) -> PlanarNetwork {
    let n = diag.len();
    let height = |i: usize| rat_of(n - i);
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 1..=n {
        vertices.push(Vertex {
            id: i - 1,
            x: Rat::zero(),
            y: height(i),
        });
    }
    for i in 1..=n {
        vertices.push(Vertex {
            id: n + i - 1,
            x: Rat::one(),
            y: height(i),
        });
    }
    let mut edges: Vec<Edge> = diag
        .iter()
        .enumerate()
        .map(|(i, d)| Edge {
            from: i,
            to: n + i,
            weight: d.clone(),
        })
        .collect();
    for (from, to, c) in diagonals {
        if !c.is_zero() {
            edges.push(Edge {
                from: from - 1,
                to: n + to - 1,
                weight: c.clone(),
            });
        }
    }
    PlanarNetwork {
        order: n,
        vertices,
        edges,
        sources: (0..n).collect(),
        sinks: (n..2 * n).collect(),
    }
}

pub fn identity_network(n: usize) -> Result<PlanarNetwork, NetworkError> {
    elementary_network(n, &ElementaryKind::Diagonal(vec![Rat::one(); n]))
}

/// Network of order `n` whose weight matrix is the given elementary matrix.
pub fn elementary_network(n: usize, kind: &ElementaryKind) -> Result<PlanarNetwork, NetworkError> {
    if n == 0 {
        return Err(NetworkError::EmptyOrder);
    }
    let ones = vec![Rat::one(); n];
    let check = |j: usize, c: &Rat| {
        if j == 0 || j >= n {
            Err(NetworkError::IndexOutOfRange { j, n })
        } else if c.is_negative() {
            Err(NetworkError::NegativeParameter(c.clone()))
        } else {
            Ok(())
        }
    };
    match kind {
        ElementaryKind::Diagonal(d) => {
            if d.len() != n {
                return Err(NetworkError::OrderMismatch(d.len(), n));
            }
            if let Some(bad) = d.iter().find(|x| !x.is_positive()) {
                return Err(NetworkError::NonPositiveDiagonal(bad.clone()));
            }
            Ok(layer(d, &[]))
        }
        ElementaryKind::Lower { j, c } => {
            check(*j, c)?;
            Ok(layer(&ones, &[(j + 1, *j, c.clone())]))
        }
        ElementaryKind::Upper { j, c } => {
            check(*j, c)?;
            Ok(layer(&ones, &[(*j, j + 1, c.clone())]))
        }
    }
}

fn min_max_x(g: &PlanarNetwork) -> (Rat, Rat) {
    let xs = g.vertices.iter().map(|v| &v.x);
    (
        xs.clone().min().cloned().unwrap_or_else(Rat::zero),
        xs.max().cloned().unwrap_or_else(Rat::zero),
    )
}

/// Places `second` to the right of `first`, gluing `t_i` of `first` to `s_i`
/// of `second`. When the terminals cannot be glued in place (different
/// heights or other vertices on the seam) they are joined by weight-one
/// bridge edges instead; either way the weight matrix is the product.
pub fn concatenate(first: &PlanarNetwork, second: &PlanarNetwork) -> Result<PlanarNetwork, NetworkError> {
    if first.order != second.order {
        return Err(NetworkError::OrderMismatch(first.order, second.order));
    }
    first.validate().map_err(NetworkError::Invalid)?;
    second.validate().map_err(NetworkError::Invalid)?;
    let (_, first_max) = min_max_x(first);
    let (second_min, _) = min_max_x(second);
    let y_of = |g: &PlanarNetwork, id: usize| g.vertices.iter().find(|v| v.id == id).map(|v| v.y.clone());
    let seam_clear = first
        .vertices
        .iter()
        .all(|v| v.x != first_max || first.sinks.contains(&v.id))
        && second
            .vertices
            .iter()
            .all(|v| v.x != second_min || second.sources.contains(&v.id));
    let glue = seam_clear
        && first
            .sinks
            .iter()
            .zip(&second.sources)
            .all(|(&t, &s)| y_of(first, t) == y_of(second, s));

    let mut vertices = Vec::with_capacity(first.vertices.len() + second.vertices.len());
    let mut first_ids = HashMap::new();
    for v in &first.vertices {
        first_ids.insert(v.id, vertices.len());
        vertices.push(Vertex {
            id: vertices.len(),
            x: v.x.clone(),
            y: v.y.clone(),
        });
    }
    let shift = if glue {
        &first_max - &second_min
    } else {
        &first_max - &second_min + Rat::one()
    };
    let mut second_ids = HashMap::new();
    for (k, &s) in second.sources.iter().enumerate() {
        if glue {
            second_ids.insert(s, first_ids[&first.sinks[k]]);
        }
    }
    for v in &second.vertices {
        if second_ids.contains_key(&v.id) {
            continue;
        }
        second_ids.insert(v.id, vertices.len());
        vertices.push(Vertex {
            id: vertices.len(),
            x: &v.x + &shift,
            y: v.y.clone(),
        });
    }
    let mut edges: Vec<Edge> = first
        .edges
        .iter()
        .map(|e| Edge {
            from: first_ids[&e.from],
            to: first_ids[&e.to],
            weight: e.weight.clone(),
        })
        .collect();
    if !glue {
        for (&t, &s) in first.sinks.iter().zip(&second.sources) {
            edges.push(Edge {
                from: first_ids[&t],
                to: second_ids[&s],
                weight: Rat::one(),
            });
        }
    }
    edges.extend(second.edges.iter().map(|e| Edge {
        from: second_ids[&e.from],
        to: second_ids[&e.to],
        weight: e.weight.clone(),
    }));
    Ok(PlanarNetwork {
        order: first.order,
        vertices,
        edges,
        sources: first.sources.iter().map(|s| first_ids[s]).collect(),
        sinks: second.sinks.iter().map(|t| second_ids[t]).collect(),
    })
}

fn chain(layers: Vec<PlanarNetwork>) -> Result<PlanarNetwork, NetworkError> {
    let mut it = layers.into_iter();
    let mut acc = it.next().ok_or(NetworkError::EmptyOrder)?;
    for next in it {
        acc = concatenate(&acc, &next)?;
    }
    Ok(acc)
}

fn factor_network(n: usize, f: &ElementaryFactor) -> Result<PlanarNetwork, NetworkError> {
    let kind = if f.is_lower() {
        ElementaryKind::Lower {
            j: f.col,
            c: f.value.clone(),
        }
    } else {
        ElementaryKind::Upper {
            j: f.row,
            c: f.value.clone(),
        }
    };
    elementary_network(n, &kind)
}

/// Realizes an invertible totally nonnegative matrix as the concatenation of
/// the elementary networks of its Neville factorization.
pub fn network_from_tnn(m: &Matrix) -> Result<PlanarNetwork, NetworkError> {
    let f = neville_factorize(m)?;
    let mut layers = Vec::with_capacity(f.lower.len() + f.upper.len() + 1);
    for e in &f.lower {
        layers.push(factor_network(f.n, e)?);
    }
    layers.push(elementary_network(f.n, &ElementaryKind::Diagonal(f.diagonal.clone()))?);
    for e in &f.upper {
        layers.push(factor_network(f.n, e)?);
    }
    chain(layers)
}

/// `V[i][j] = x_j^(i-1)`.
pub fn vandermonde_matrix(x: &[Rat]) -> Result<Matrix, NetworkError> {
    let n = x.len();
    if n == 0 {
        return Err(NetworkError::EmptyOrder);
    }
    let mut rows = vec![vec![Rat::one(); n]];
    for i in 1..n {
        let next = rows[i - 1].iter().zip(x).map(|(p, xj)| p * xj).collect();
        rows.push(next);
    }
    Ok(Matrix::from_rows(rows)?)
}

/// Network realizing the Vandermonde matrix of `0 <= x_1 < ... < x_n`.
pub fn vandermonde_network(x: &[Rat]) -> Result<PlanarNetwork, NetworkError> {
    if x.first().is_some_and(|x1| x1.is_negative()) || x.windows(2).any(|w| w[0] >= w[1]) {
        return Err(NetworkError::BadPoints);
    }
    network_from_tnn(&vandermonde_matrix(x)?)
}

/// Staircase network whose weight matrix is the lower triangular Pascal
/// matrix `d_ij = binomial(i, j)`, `0 <= i, j < levels`.
pub fn binomial_network(levels: usize) -> Result<PlanarNetwork, NetworkError> {
    if levels == 0 {
        return Err(NetworkError::EmptyOrder);
    }
    if levels == 1 {
        return identity_network(1);
    }
    let ones = vec![Rat::one(); levels];
    // P = B_{n-1} ... B_1 with B_k = I + sum_{j >= k} E_{j+1,j}
    let layers = (1..levels)
        .rev()
        .map(|k| {
            let diagonals: Vec<_> = (k..levels).map(|j| (j + 1, j, Rat::one())).collect();
            layer(&ones, &diagonals)
        })
        .collect();
    chain(layers)
}
