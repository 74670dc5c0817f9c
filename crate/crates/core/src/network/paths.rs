use num_traits::{One, Zero};
use serde::Serialize;

use super::{Indexed, NetworkError, PlanarNetwork};
use crate::exact::{IndexSet, Matrix, MatrixError, Rat};

/// Default bound on the number of paths counted per source/sink pair, and on
/// the number of paths or families enumerated explicitly.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// Paths `π_1, ..., π_k`, each a list of vertex ids from a source to a sink.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathFamily {
    pub paths: Vec<Vec<usize>>,
    #[serde(with = "crate::exact::serde_rat")]
    pub weight: Rat,
}

struct Path {
    vertices: Vec<usize>,
    weight: Rat,
}

impl PlanarNetwork {
    /// Matrix whose `(i, j)` entry is the total weight of all paths from
    /// `s_i` to `t_j`.
    pub fn weight_matrix(&self) -> Result<Matrix, NetworkError> {
        self.weight_matrix_with_cap(DEFAULT_PATH_CAP)
    }

    pub fn weight_matrix_with_cap(&self, cap: usize) -> Result<Matrix, NetworkError> {
        if self.order == 0 {
            return Err(NetworkError::EmptyOrder);
        }
        let g = self.indexed()?;
        let n = self.order;
        let mut rows = Vec::with_capacity(n);
        for &s in &self.sources {
            let (weight, count) = g.reach_from(g.slot[&s]);
            let mut row = Vec::with_capacity(n);
            for &t in &self.sinks {
                let k = g.slot[&t];
                if count[k] > cap as u64 {
                    return Err(NetworkError::PathCapExceeded(cap));
                }
                row.push(weight[k].clone());
            }
            rows.push(row);
        }
        Ok(Matrix::from_rows(rows)?)
    }

    /// Total weight of the vertex-disjoint families joining the `k`-th
    /// source of `rows` to the `k`-th sink of `cols`.
    pub fn disjoint_family_weight(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Rat, NetworkError> {
        Ok(self
            .disjoint_families(rows, cols, DEFAULT_PATH_CAP)?
            .iter()
            .map(|f| &f.weight)
            .sum())
    }

    /// All vertex-disjoint families joining sources `rows` to sinks `cols`
    /// in order. The empty family is the unique family for empty index sets.
    pub fn disjoint_families(
        &self,
        rows: &IndexSet,
        cols: &IndexSet,
        cap: usize,
    ) -> Result<Vec<PathFamily>, NetworkError> {
        if rows.len() != cols.len() {
            return Err(MatrixError::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            }
            .into());
        }
        rows.check_bound(self.order)?;
        cols.check_bound(self.order)?;
        let g = self.indexed()?;
        let mut budget = cap;
        let mut candidates = Vec::with_capacity(rows.len());
        for (i, j) in rows.iter().zip(cols.iter()) {
            let from = g.slot[&self.sources[i - 1]];
            let to = g.slot[&self.sinks[j - 1]];
            candidates.push(
                g.all_paths(from, to, &mut budget)
                    .map_err(|_| NetworkError::PathCapExceeded(cap))?,
            );
        }
        let mut used = vec![false; self.vertices.len()];
        let mut chosen = Vec::new();
        let mut out = Vec::new();
        let mut visits = 0usize;
        pick(&candidates, &mut used, &mut chosen, &mut out, &mut visits, cap, &g)?;
        Ok(out)
    }
}

fn pick<'p>(
    candidates: &'p [Vec<Path>],
    used: &mut [bool],
    chosen: &mut Vec<&'p Path>,
    out: &mut Vec<PathFamily>,
    visits: &mut usize,
    cap: usize,
    g: &Indexed,
) -> Result<(), NetworkError> {
    *visits += 1;
    if *visits > cap {
        return Err(NetworkError::PathCapExceeded(cap));
    }
    let k = chosen.len();
    if k == candidates.len() {
        let weight = chosen.iter().fold(Rat::one(), |acc, p| acc * &p.weight);
        let paths = chosen
            .iter()
            .map(|p| p.vertices.iter().map(|&v| g.net.vertices[v].id).collect())
            .collect();
        out.push(PathFamily { paths, weight });
        return Ok(());
    }
    for path in &candidates[k] {
        if path.vertices.iter().any(|&v| used[v]) {
            continue;
        }
        for &v in &path.vertices {
            used[v] = true;
        }
        chosen.push(path);
        pick(candidates, used, chosen, out, visits, cap, g)?;
        chosen.pop();
        for &v in &path.vertices {
            used[v] = false;
        }
    }
    Ok(())
}

impl Indexed<'_> {
    /// Path weight sums and (saturating) path counts from `from` to every
    /// vertex.
    fn reach_from(&self, from: usize) -> (Vec<Rat>, Vec<u64>) {
        let len = self.net.vertices.len();
        let mut weight = vec![Rat::zero(); len];
        let mut count = vec![0u64; len];
        weight[from] = Rat::one();
        count[from] = 1;
        for &v in &self.topo {
            if count[v] == 0 {
                continue;
            }
            for &e in &self.out[v] {
                let edge = &self.net.edges[e];
                let w = self.slot[&edge.to];
                let add = &weight[v] * &edge.weight;
                weight[w] += add;
                count[w] = count[w].saturating_add(count[v]);
            }
        }
        (weight, count)
    }

    fn all_paths(&self, from: usize, to: usize, budget: &mut usize) -> Result<Vec<Path>, NetworkError> {
        let mut out = Vec::new();
        let mut stack = vec![from];
        self.extend_paths(from, to, Rat::one(), &mut stack, &mut out, budget)?;
        Ok(out)
    }

    fn extend_paths(
        &self,
        at: usize,
        to: usize,
        weight: Rat,
        stack: &mut Vec<usize>,
        out: &mut Vec<Path>,
        budget: &mut usize,
    ) -> Result<(), NetworkError> {
        if at == to {
            if *budget == 0 {
                return Err(NetworkError::PathCapExceeded(DEFAULT_PATH_CAP));
            }
            *budget -= 1;
            out.push(Path {
                vertices: stack.clone(),
                weight,
            });
            return Ok(());
        }
        for &e in &self.out[at] {
            let edge = &self.net.edges[e];
            let next = self.slot[&edge.to];
            stack.push(next);
            self.extend_paths(next, to, &weight * &edge.weight, stack, out, budget)?;
            stack.pop();
        }
        Ok(())
    }
}
