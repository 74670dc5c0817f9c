//! Set partitions of `[n]` read off a lattice walk.

use std::collections::BTreeMap;
use std::fmt;

use super::Coloring;

/// A set partition of `[n]`; blocks are sorted and listed by their least
/// element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&i))
    }

    /// Whether every block lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.blocks.iter().all(|b| {
            let target = other.block_of(b[0]);
            target.is_some() && b.iter().all(|&i| other.block_of(i) == target)
        })
    }
}

/// `{{1,3},{2}}`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                format!(
                    "{{{}}}",
                    b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

/// Step `i` of the walk rises by 1 when `i ∈ I` and falls by 1 otherwise.
/// Steps are grouped by the unit band of heights they cross, that is, by
/// the lower of their two endpoint heights.
pub fn lattice_partition(c: &Coloring) -> SetPartition {
    let mut height = 0i64;
    let mut bands: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in 1..=c.n() {
        let next = if c.contains(i) { height + 1 } else { height - 1 };
        bands.entry(height.min(next)).or_default().push(i);
        height = next;
    }
    SetPartition::new(bands.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walks() {
        assert_eq!(lattice_partition(&Coloring::of(2, &[1, 2])).to_string(), "{{1},{2}}");
        assert_eq!(lattice_partition(&Coloring::of(2, &[1])).to_string(), "{{1,2}}");
        assert_eq!(lattice_partition(&Coloring::of(3, &[1, 3])).to_string(), "{{1,2,3}}");
        assert_eq!(lattice_partition(&Coloring::of(3, &[1])).to_string(), "{{1,2},{3}}");
        assert_eq!(lattice_partition(&Coloring::of(3, &[1, 2])).to_string(), "{{1},{2,3}}");
    }

    #[test]
    fn complement_gives_the_same_partition() {
        for n in 1..=7 {
            for c in Coloring::all(n) {
                assert_eq!(lattice_partition(&c), lattice_partition(&c.complement()));
            }
        }
    }

    #[test]
    fn refinement() {
        let fine = SetPartition::new(vec![vec![1], vec![2], vec![3]]);
        let mid = SetPartition::new(vec![vec![2, 1], vec![3]]);
        let top = SetPartition::new(vec![vec![1, 2, 3]]);
        assert!(fine.refines(&mid) && mid.refines(&top) && fine.refines(&top));
        assert!(!top.refines(&mid));
        assert!(mid.refines(&mid));
        let other = SetPartition::new(vec![vec![1], vec![2, 3]]);
        assert!(!mid.refines(&other) && !other.refines(&mid));
    }
}
