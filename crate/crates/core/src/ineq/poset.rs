//! The poset of products `Δ_{I,I}Δ_{Ī,Ī}` for fixed `n`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{tl_basis, Coloring, IneqError, Key, Method};

/// Largest `n` accepted by [`poset`].
pub const DEFAULT_POSET_BOUND: usize = 8;

/// Products that the criterion cannot tell apart. `members` holds one
/// coloring per product (the one with `1 ∈ I`), sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetNode {
    pub members: Vec<Coloring>,
}

impl PosetNode {
    pub fn representative(&self) -> &Coloring {
        &self.members[0]
    }

    pub fn label(&self) -> String {
        self.members
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" = ")
    }
}

/// `Δ_{lhs,lhs}Δ_{l̄hs,l̄hs} ≤ Δ_{rhs,rhs}Δ_{r̄hs,r̄hs}` for `n × n` matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    pub n: usize,
    /// Ordered so that every node comes after all nodes below it.
    pub nodes: Vec<PosetNode>,
    /// Pairs `(a, b)` of node indices with `a < b` in the order.
    pub relations: Vec<(usize, usize)>,
    /// The covering pairs among `relations`.
    pub covers: Vec<(usize, usize)>,
}

impl Poset {
    /// One inequality per strict relation, between representatives.
    pub fn inequalities(&self) -> Vec<Inequality> {
        self.relations
            .iter()
            .map(|&(a, b)| Inequality {
                lhs: self.nodes[a].representative().set().as_slice().to_vec(),
                rhs: self.nodes[b].representative().set().as_slice().to_vec(),
                n: self.n,
            })
            .collect()
    }

    /// Hasse diagram, smaller products at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", node.label()).expect("write to string");
        }
        for (a, b) in &self.covers {
            writeln!(out, "  n{a} -> n{b};").expect("write to string");
        }
        out.push_str("}\n");
        out
    }

    /// `[{"lhs": [...], "rhs": [...], "n": n}, ...]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.inequalities()).expect("inequalities serialize")
    }
}

/// The Temperley–Lieb poset for `n ≤` [`DEFAULT_POSET_BOUND`].
pub fn poset(n: usize) -> Result<Poset, IneqError> {
    poset_with(n, Method::TemperleyLieb, DEFAULT_POSET_BOUND)
}

pub fn poset_with(n: usize, method: Method, bound: usize) -> Result<Poset, IneqError> {
    if n == 0 {
        return Err(IneqError::EmptyOrder);
    }
    if n > bound {
        return Err(IneqError::TooLarge { n, bound });
    }
    let basis = match method {
        Method::TemperleyLieb => tl_basis(n),
        Method::Lattice => Vec::new(),
    };
    let mut groups: Vec<(Key, Vec<Coloring>)> = Vec::new();
    for c in Coloring::all(n).into_iter().filter(|c| c.contains(1)) {
        let key = Key::of(&c, method, &basis);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(c),
            None => groups.push((key, vec![c])),
        }
    }
    for (_, members) in &mut groups {
        members.sort();
    }
    let below = |i: usize, groups: &[(Key, Vec<Coloring>)]| groups.iter().filter(|(k, _)| k.le(&groups[i].0)).count();
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by_key(|&i| (below(i, &groups), groups[i].1[0].set().clone()));
    let groups: Vec<(Key, Vec<Coloring>)> = order.into_iter().map(|i| groups[i].clone()).collect();

    let m = groups.len();
    let less = |a: usize, b: usize| a != b && groups[a].0.le(&groups[b].0);
    let relations: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| less(a, b))
        .collect();
    let covers = relations
        .iter()
        .copied()
        .filter(|&(a, b)| !(0..m).any(|c| less(a, c) && less(c, b)))
        .collect();
    Ok(Poset {
        n,
        nodes: groups.into_iter().map(|(_, members)| PosetNode { members }).collect(),
        relations,
        covers,
    })
}
