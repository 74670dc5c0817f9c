//! Seedable generators of random networks and totally nonnegative matrices,
//! used by the property tests and the acceptance suite.

use rand::Rng;

use crate::exact::{Matrix, Rat};
use crate::network::{concatenate, elementary_network, Edge, ElementaryKind, PlanarNetwork, Vertex};

/// Nonnegative rational `p/q` with `p <= max_num`, `1 <= q <= max_den`.
pub fn random_rat<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(0..=max_num).into(), rng.gen_range(1..=max_den).into())
}

fn positive_rat<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=4).into())
}

/// A grid network of order `n` with `columns + 1` vertex columns. Between
/// consecutive columns each row gets at most one edge: horizontal, up one row
/// or down one row, never forming an X. At most `max_edges` edges are kept,
/// with random weights (zero included).
pub fn random_grid_network<R: Rng>(rng: &mut R, n: usize, columns: usize, max_edges: usize) -> PlanarNetwork {
    assert!(n >= 1 && columns >= 1, "need at least one row and one gap");
    let id = |c: usize, i: usize| c * n + i;
    let mut vertices = Vec::with_capacity((columns + 1) * n);
    for c in 0..=columns {
        for i in 0..n {
            vertices.push(Vertex {
                id: id(c, i),
                x: Rat::from_integer(c.into()),
                y: Rat::from_integer((n - 1 - i).into()),
            });
        }
    }
    let mut edges = Vec::new();
    'gaps: for c in 0..columns {
        let mut previous_down = false;
        for i in 0..n {
            if edges.len() >= max_edges {
                break 'gaps;
            }
            // 0: none, 1: horizontal, 2: up, 3: down
            let mut choice = rng.gen_range(0..4);
            if (choice == 2 && (i == 0 || previous_down)) || (choice == 3 && i + 1 == n) {
                choice = 1;
            }
            previous_down = choice == 3;
            let target = match choice {
                1 => i,
                2 => i - 1,
                3 => i + 1,
                _ => continue,
            };
            edges.push(Edge {
                from: id(c, i),
                to: id(c + 1, target),
                weight: random_rat(rng, 6, 3),
            });
        }
    }
    PlanarNetwork {
        order: n,
        vertices,
        edges,
        sources: (0..n).map(|i| id(0, i)).collect(),
        sinks: (0..n).map(|i| id(columns, i)).collect(),
    }
}

/// Weight matrix of a random grid network: totally nonnegative, possibly
/// singular.
pub fn random_tnn_matrix<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let columns = rng.gen_range(1..=4);
    random_grid_network(rng, n, columns, 12)
        .weight_matrix()
        .expect("grid networks are valid")
}

/// A concatenation of random elementary networks around a positive diagonal;
/// its weight matrix is invertible and totally nonnegative.
pub fn random_invertible_tnn_network<R: Rng>(rng: &mut R, n: usize) -> PlanarNetwork {
    let mut layers = Vec::new();
    let push_factors = |rng: &mut R, lower: bool, layers: &mut Vec<PlanarNetwork>| {
        if n < 2 {
            return;
        }
        for _ in 0..rng.gen_range(0..=n * (n - 1) / 2 + 1) {
            let j = rng.gen_range(1..n);
            let c = positive_rat(rng);
            let kind = if lower {
                ElementaryKind::Lower { j, c }
            } else {
                ElementaryKind::Upper { j, c }
            };
            layers.push(elementary_network(n, &kind).expect("valid parameters"));
        }
    };
    push_factors(rng, true, &mut layers);
    let diagonal = (0..n).map(|_| positive_rat(rng)).collect();
    layers.push(elementary_network(n, &ElementaryKind::Diagonal(diagonal)).expect("positive diagonal"));
    push_factors(rng, false, &mut layers);
    let mut it = layers.into_iter();
    let first = it.next().expect("diagonal layer is always present");
    it.fold(first, |acc, g| concatenate(&acc, &g).expect("same order"))
}

pub fn random_invertible_tnn_matrix<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    random_invertible_tnn_network(rng, n)
        .weight_matrix()
        .expect("concatenations of elementary networks are valid")
}
