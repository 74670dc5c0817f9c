//! The standard basis of the Temperley–Lieb algebra `T_n`.

use std::fmt;

use super::Coloring;

/// A boundary vertex: source `s_i` or sink `t_i`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Source(usize),
    Sink(usize),
}

impl Endpoint {
    pub fn index(self) -> usize {
        match self {
            Endpoint::Source(i) | Endpoint::Sink(i) => i,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Source(i) => write!(f, "s{i}"),
            Endpoint::Sink(i) => write!(f, "t{i}"),
        }
    }
}

/// A noncrossing perfect matching of `2n` points on a circle. Points
/// `1..=n` are the sources `s_1..s_n` top to bottom, and points
/// `n+1..=2n` are the sinks from the bottom up, so point `2n+1-i` is `t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TlDiagram {
    n: usize,
    /// Arcs `(a, b)` with `a < b`, sorted by `a`.
    arcs: Vec<(usize, usize)>,
}

impl TlDiagram {
    /// Validates an arc list on points `1..=2n`.
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Option<Self> {
        for arc in &mut arcs {
            if arc.0 > arc.1 {
                *arc = (arc.1, arc.0);
            }
        }
        arcs.sort_unstable();
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in &arcs {
            if a == 0 || b > 2 * n || a == b || seen[a] || seen[b] {
                return None;
            }
            seen[a] = true;
            seen[b] = true;
        }
        if arcs.len() != n {
            return None;
        }
        let crossing = arcs
            .iter()
            .any(|&(a, b)| arcs.iter().any(|&(c, d)| a < c && c < b && b < d));
        if crossing {
            return None;
        }
        Some(TlDiagram { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn endpoint(&self, point: usize) -> Endpoint {
        if point <= self.n {
            Endpoint::Source(point)
        } else {
            Endpoint::Sink(2 * self.n + 1 - point)
        }
    }

    /// Arcs as pairs of endpoints.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        self.arcs
            .iter()
            .map(|&(a, b)| (self.endpoint(a), self.endpoint(b)))
            .collect()
    }

    /// Whether every arc joins two sources of different colors, two sinks of
    /// different colors, or a source and a sink of the same color.
    pub fn allowed_by(&self, c: &Coloring) -> bool {
        self.pairs().into_iter().all(|(x, y)| {
            let same = c.contains(x.index()) == c.contains(y.index());
            match (x, y) {
                (Endpoint::Source(_), Endpoint::Source(_)) | (Endpoint::Sink(_), Endpoint::Sink(_)) => !same,
                _ => same,
            }
        })
    }
}

/// Arcs in the form `s1-t1 s2-s3 t2-t3`.
impl fmt::Display for TlDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(x, y)| format!("{x}-{y}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// All noncrossing perfect matchings on `2n` points, `Catalan(n)` of them.
/// Point 1 is matched first, to each admissible partner in increasing order.
pub fn tl_basis(n: usize) -> Vec<TlDiagram> {
    matchings(1, 2 * n)
        .into_iter()
        .map(|arcs| TlDiagram::new(n, arcs).expect("noncrossing by construction"))
        .collect()
}

fn matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for partner in (lo + 1..=hi).step_by(2) {
        for inside in matchings(lo + 1, partner - 1) {
            for outside in matchings(partner + 1, hi) {
                let mut arcs = vec![(lo, partner)];
                arcs.extend(inside.iter().copied());
                arcs.extend(outside.iter().copied());
                out.push(arcs);
            }
        }
    }
    out
}

/// The diagrams of `T_n` allowed by the coloring.
pub fn tl_subset(c: &Coloring) -> Vec<TlDiagram> {
    tl_basis(c.n()).into_iter().filter(|d| d.allowed_by(c)).collect()
}
