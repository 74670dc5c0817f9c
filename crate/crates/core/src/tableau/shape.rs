use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Partition, TableauError};

/// The cells of `outer` that are not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, TableauError> {
        if !outer.contains(&inner) {
            return Err(TableauError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of cells in row `r` (0-based).
    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    /// 1-based `(row, column)` of every cell in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r + 1, c)))
            .collect()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }

    /// Parses `outer/inner` or a bare `outer`.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        match text.split_once('/') {
            Some((outer, inner)) => Self::new(Partition::parse(outer)?, Partition::parse(inner)?),
            None => Ok(Self::straight(Partition::parse(text)?)),
        }
    }
}

impl FromStr for SkewShape {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SkewShape::parse(s)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
