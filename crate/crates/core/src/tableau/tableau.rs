use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Partition, SkewShape, TableauError};

/// A filling of a skew shape by positive integers. `rows[r]` lists the
/// entries of the cells of row `r`, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        if rows.len() != shape.rows() {
            return Err(TableauError::RowCount {
                expected: shape.rows(),
                found: rows.len(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(TableauError::RowLength {
                    row: r + 1,
                    expected: shape.row_len(r),
                    found: row.len(),
                });
            }
            if row.contains(&0) {
                return Err(TableauError::ZeroEntry);
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Self::new(SkewShape::straight(shape), rows)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at 1-based `(row, column)`, `None` outside the skew shape.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        Some(self.rows[row - 1][col - 1 - self.shape.inner().part(row - 1)])
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.shape.cells().into_iter().all(|(r, c)| {
            let v = self.get(r, c).expect("cell of the shape");
            self.get(r, c + 1).is_none_or(|right| v <= right) && self.get(r + 1, c).is_none_or(|below| v < below)
        })
    }

    /// Semistandard with entries exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let mut seen = self.reading_word();
        seen.sort_unstable();
        seen.iter().copied().eq(1..=self.size()) && self.is_semistandard()
    }

    /// `c(T)`: entry `k - 1` counts the occurrences of `k`; the vector ends
    /// at the largest entry.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Content padded or truncated to `len` entries.
    pub fn content_padded(&self, len: usize) -> Vec<usize> {
        let mut c = self.content();
        c.resize(len, 0);
        c
    }

    pub fn columns(&self) -> usize {
        self.shape.outer().first()
    }

    /// `T_j`: the cells of columns `j, j+1, ...`, left in place.
    pub fn column_suffix(&self, j: usize) -> Result<Tableau, TableauError> {
        let cols = self.columns();
        if j == 0 || j > cols {
            return Err(TableauError::ColumnOutOfRange { j, cols });
        }
        let keep = (0..self.shape.rows())
            .take_while(|&r| self.shape.outer().part(r) >= j)
            .count();
        let outer = Partition::new(self.shape.outer().parts()[..keep].to_vec())?;
        let inner = Partition::from_padded((0..keep).map(|r| self.shape.inner().part(r).max(j - 1)).collect())?;
        let rows = (0..keep)
            .map(|r| {
                let start = self.shape.inner().part(r);
                let skip = (j - 1).saturating_sub(start);
                self.rows[r][skip..].to_vec()
            })
            .collect();
        Tableau::new(SkewShape::new(outer, inner)?, rows)
    }

    /// Entries row by row, top to bottom, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// One line per row with entries separated by spaces; cells of the inner
    /// shape are written `.`.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let dots = tokens.iter().take_while(|t| **t == ".").count();
            let entries = tokens[dots..]
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| TableauError::Parse(format!("invalid entry '{t}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            outer.push(tokens.len());
            inner.push(dots);
            rows.push(entries);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::from_padded(inner)?)?;
        Tableau::new(shape, rows)
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tableau::parse(s)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            let mut tokens = vec![".".to_string(); self.shape.inner().part(r)];
            tokens.extend(row.iter().map(|v| v.to_string()));
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Tableau {
        Tableau::from_rows(vec![vec![1, 1, 2, 3], vec![2, 3, 3], vec![4], vec![5]]).unwrap()
    }

    #[test]
    fn content_and_column_suffixes() {
        let t = example();
        assert!(t.is_semistandard() && !t.is_standard());
        assert_eq!(t.content(), vec![2, 2, 3, 1, 1]);
        assert_eq!(t.column_suffix(1).unwrap(), t);
        assert_eq!(t.column_suffix(2).unwrap().content_padded(5), vec![1, 1, 3, 0, 0]);
        assert_eq!(t.column_suffix(3).unwrap().content_padded(5), vec![0, 1, 2, 0, 0]);
        assert_eq!(t.column_suffix(4).unwrap().content_padded(5), vec![0, 0, 1, 0, 0]);
        assert!(t.column_suffix(5).is_err());
        assert!(t.column_suffix(0).is_err());
    }

    #[test]
    fn small_contents() {
        let empty = Tableau::from_rows(vec![]).unwrap();
        assert!(empty.content().is_empty());
        let single = Tableau::from_rows(vec![vec![3]]).unwrap();
        assert_eq!(single.content(), vec![0, 0, 1]);
    }

    #[test]
    fn reading_words() {
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap().reading_word(),
            vec![1, 3, 2]
        );
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap().reading_word(),
            vec![1, 2, 3]
        );
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 2, 3]]).unwrap().reading_word(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn text_round_trip() {
        let text = ". . 1 5\n. 2 3\n4 6\n";
        let t = Tableau::parse(text).unwrap();
        assert_eq!(t.shape().to_string(), "4,3,2/2,1");
        assert_eq!(t.get(1, 3), Some(1));
        assert_eq!(t.get(1, 2), None);
        assert!(t.is_standard());
        assert_eq!(t.to_string(), text);
        assert!(Tableau::parse("1 x").is_err());
        assert!(Tableau::parse("1\n2 3").is_err());
        assert!(Tableau::parse("0").is_err());
    }

    #[test]
    fn row_shape_mismatch() {
        let shape = SkewShape::parse("2,1").unwrap();
        assert!(Tableau::new(shape.clone(), vec![vec![1]]).is_err());
        assert!(Tableau::new(shape, vec![vec![1], vec![2]]).is_err());
    }
}
