//! Weighted planar networks.
//!
//! A network is drawn in the plane: every vertex has rational coordinates and
//! every edge is the straight segment between its endpoints, pointing to the
//! right. Sources sit on the left boundary and sinks on the right boundary,
//! both listed from top (largest `y`) to bottom.

mod build;
mod geometry;
mod io;
mod paths;

pub use build::{
    binomial_network, concatenate, elementary_network, identity_network, network_from_tnn, vandermonde_matrix,
    vandermonde_network, ElementaryKind,
};
pub use paths::{PathFamily, DEFAULT_PATH_CAP};

use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{MatrixError, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    #[serde(with = "crate::exact::serde_rat")]
    pub x: Rat,
    #[serde(with = "crate::exact::serde_rat")]
    pub y: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    #[serde(with = "crate::exact::serde_rat")]
    pub weight: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarNetwork {
    pub order: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

/// The first broken invariant found by [`PlanarNetwork::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TerminalCount { sources: usize, sinks: usize, order: usize },
    DuplicateVertex(usize),
    DuplicatePosition(usize, usize),
    UnknownVertex(usize),
    RepeatedTerminal(usize),
    NegativeWeight { edge: usize },
    NotRightward { edge: usize },
    SourceInDegree(usize),
    SinkOutDegree(usize),
    SourcePlacement(usize),
    SinkPlacement(usize),
    EdgeCrossing(usize, usize),
    VertexOnEdge { vertex: usize, edge: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TerminalCount { sources, sinks, order } => write!(
                f,
                "terminal count: {sources} sources and {sinks} sinks for order {order}"
            ),
            Violation::DuplicateVertex(id) => write!(f, "duplicate vertex id {id}"),
            Violation::DuplicatePosition(a, b) => {
                write!(f, "vertices {a} and {b} share a position")
            }
            Violation::UnknownVertex(id) => write!(f, "unknown vertex id {id}"),
            Violation::RepeatedTerminal(id) => {
                write!(f, "vertex {id} is listed more than once as a terminal")
            }
            Violation::NegativeWeight { edge } => write!(f, "negative weight on edge {edge}"),
            Violation::NotRightward { edge } => {
                write!(f, "edge {edge} does not strictly increase x")
            }
            Violation::SourceInDegree(id) => write!(f, "source in-degree: vertex {id} has incoming edges"),
            Violation::SinkOutDegree(id) => write!(f, "sink out-degree: vertex {id} has outgoing edges"),
            Violation::SourcePlacement(id) => write!(
                f,
                "source placement: vertex {id} is not on the left boundary in top-to-bottom order"
            ),
            Violation::SinkPlacement(id) => write!(
                f,
                "sink placement: vertex {id} is not on the right boundary in top-to-bottom order"
            ),
            Violation::EdgeCrossing(a, b) => write!(f, "edge crossing: edges {a} and {b}"),
            Violation::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex {vertex} lies inside edge {edge}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("invalid network: {0}")]
    Invalid(Violation),
    #[error("network orders differ ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("negative parameter {0}")]
    NegativeParameter(Rat),
    #[error("diagonal parameters must be positive, found {0}")]
    NonPositiveDiagonal(Rat),
    #[error("elementary index {j} out of range for order {n}")]
    IndexOutOfRange { j: usize, n: usize },
    #[error("more than {0} paths; raise the cap to continue")]
    PathCapExceeded(usize),
    #[error("points must be nonnegative and strictly increasing")]
    BadPoints,
    #[error("network order must be at least 1")]
    EmptyOrder,
    #[error("network JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Validated adjacency view with vertices in increasing-`x` order.
pub(crate) struct Indexed<'a> {
    pub(crate) net: &'a PlanarNetwork,
    pub(crate) slot: HashMap<usize, usize>,
    pub(crate) out: Vec<Vec<usize>>,
    pub(crate) topo: Vec<usize>,
}

impl PlanarNetwork {
    pub fn validate(&self) -> Result<(), Violation> {
        let net = self;
        if net.sources.len() != net.order || net.sinks.len() != net.order {
            return Err(Violation::TerminalCount {
                sources: net.sources.len(),
                sinks: net.sinks.len(),
                order: net.order,
            });
        }
        let mut slot = HashMap::new();
        for (k, v) in net.vertices.iter().enumerate() {
            if slot.insert(v.id, k).is_some() {
                return Err(Violation::DuplicateVertex(v.id));
            }
        }
        let vertex = |id: usize| {
            slot.get(&id)
                .map(|&k| &net.vertices[k])
                .ok_or(Violation::UnknownVertex(id))
        };
        let mut positions: HashMap<(&Rat, &Rat), usize> = HashMap::new();
        for v in &net.vertices {
            if let Some(other) = positions.insert((&v.x, &v.y), v.id) {
                return Err(Violation::DuplicatePosition(other, v.id));
            }
        }
        let mut terminals = std::collections::HashSet::new();
        for &id in net.sources.iter().chain(&net.sinks) {
            vertex(id)?;
            if !terminals.insert(id) {
                return Err(Violation::RepeatedTerminal(id));
            }
        }
        for (k, e) in net.edges.iter().enumerate() {
            let (a, b) = (vertex(e.from)?, vertex(e.to)?);
            if e.weight.is_negative() {
                return Err(Violation::NegativeWeight { edge: k });
            }
            if b.x <= a.x {
                return Err(Violation::NotRightward { edge: k });
            }
        }
        for &s in &net.sources {
            if net.edges.iter().any(|e| e.to == s) {
                return Err(Violation::SourceInDegree(s));
            }
        }
        for &t in &net.sinks {
            if net.edges.iter().any(|e| e.from == t) {
                return Err(Violation::SinkOutDegree(t));
            }
        }
        if let (Some(min_x), Some(max_x)) = (
            net.vertices.iter().map(|v| &v.x).min(),
            net.vertices.iter().map(|v| &v.x).max(),
        ) {
            check_boundary(&net.sources, min_x, &vertex, Violation::SourcePlacement)?;
            check_boundary(&net.sinks, max_x, &vertex, Violation::SinkPlacement)?;
        }
        let segment = |e: &Edge| {
            let a = vertex(e.from).expect("checked above");
            let b = vertex(e.to).expect("checked above");
            geometry::Segment::new(a, b)
        };
        for (k, e) in net.edges.iter().enumerate() {
            let seg = segment(e);
            for v in &net.vertices {
                if v.id != e.from && v.id != e.to && seg.contains_strictly(v) {
                    return Err(Violation::VertexOnEdge { vertex: v.id, edge: k });
                }
            }
            for (l, f) in net.edges.iter().enumerate().skip(k + 1) {
                if geometry::segments_conflict(&seg, e, &segment(f), f) {
                    return Err(Violation::EdgeCrossing(k, l));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn indexed(&self) -> Result<Indexed<'_>, NetworkError> {
        self.validate().map_err(NetworkError::Invalid)?;
        let slot: HashMap<usize, usize> = self.vertices.iter().enumerate().map(|(k, v)| (v.id, k)).collect();
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            out[slot[&e.from]].push(k);
        }
        // edges point right, so sorting by x is a topological order
        let mut topo: Vec<usize> = (0..self.vertices.len()).collect();
        topo.sort_by(|&a, &b| self.vertices[a].x.cmp(&self.vertices[b].x));
        Ok(Indexed {
            net: self,
            slot,
            out,
            topo,
        })
    }
}

fn check_boundary<'a>(
    ids: &[usize],
    boundary_x: &Rat,
    vertex: &impl Fn(usize) -> Result<&'a Vertex, Violation>,
    violation: fn(usize) -> Violation,
) -> Result<(), Violation> {
    let mut previous: Option<&Rat> = None;
    for &id in ids {
        let v = vertex(id)?;
        if &v.x != boundary_x || previous.is_some_and(|p| &v.y >= p) {
            return Err(violation(id));
        }
        previous = Some(&v.y);
    }
    Ok(())
}
