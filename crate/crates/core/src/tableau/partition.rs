use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TableauError;

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) {
            return Err(TableauError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts; the remaining parts must already be decreasing.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self, TableauError> {
        parts.retain(|&p| p > 0);
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        Partition(
            (1..=self.first())
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self + content` when that is a partition.
    pub fn add_content(&self, content: &[usize]) -> Option<Partition> {
        let len = self.len().max(content.len());
        let sum: Vec<usize> = (0..len)
            .map(|i| self.part(i) + content.get(i).copied().unwrap_or(0))
            .collect();
        if sum.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Partition::from_padded(sum).ok()
    }

    /// All partitions of `n` in lexicographically decreasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }

    /// Cells that can be removed leaving a partition, as 1-based
    /// `(row, column)`.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| (i + 1, self.part(i)))
            .collect()
    }

    /// Parses `3,2,1`, `[3,2,1]`, `(3,2,1)` or the empty string.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        let inner = text
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| TableauError::Parse(format!("invalid part '{}' in '{text}'", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_padded(parts)
    }
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = TableauError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

/// Comma-separated parts: `3,2,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
