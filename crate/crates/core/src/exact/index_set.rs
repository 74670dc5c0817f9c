use std::fmt;

use serde::{Deserialize, Serialize};

use super::MatrixError;

/// Strictly increasing list of 1-based row or column indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self, MatrixError> {
        if indices.contains(&0) {
            return Err(MatrixError::InvalidIndexSet("indices are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(MatrixError::InvalidIndexSet(format!(
                "{indices:?} is not strictly increasing"
            )));
        }
        Ok(IndexSet(indices))
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(mut indices: Vec<usize>) -> Result<Self, MatrixError> {
        indices.sort_unstable();
        indices.dedup();
        Self::new(indices)
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// `[n] \ self`.
    pub fn complement(&self, n: usize) -> Self {
        IndexSet((1..=n).filter(|i| !self.contains(*i)).collect())
    }

    pub fn check_bound(&self, bound: usize) -> Result<(), MatrixError> {
        match self.max() {
            Some(index) if index > bound => Err(MatrixError::IndexOutOfRange { index, bound }),
            _ => Ok(()),
        }
    }

    /// All `k`-subsets of `[n]` in lexicographic order.
    pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut current: Vec<usize> = (1..=k).collect();
        loop {
            out.push(IndexSet(current.clone()));
            // advance to the next combination
            let mut i = k;
            while i > 0 && current[i - 1] == n - k + i {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            current[i - 1] += 1;
            for t in i..k {
                current[t] = current[t - 1] + 1;
            }
        }
    }

    /// Parses `1,2,3`; the empty string (or `{}`) is the empty set.
    pub fn parse(s: &str) -> Result<Self, MatrixError> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let indices = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| MatrixError::Parse(format!("invalid index '{t}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(indices)
    }
}

impl TryFrom<Vec<usize>> for IndexSet {
    type Error = MatrixError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        IndexSet::new(v)
    }
}

impl From<IndexSet> for Vec<usize> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
