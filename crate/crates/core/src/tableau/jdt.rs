//! Jeu de taquin on standard skew tableaux.

use std::collections::{BTreeSet, HashMap};

use super::enumerate::grid_to_tableau;
use super::{Partition, SkewShape, Tableau, TableauError};

impl Tableau {
    /// Inner corners: cells of the inner shape whose removal leaves a
    /// partition, as 1-based `(row, column)`.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        self.shape().inner().corners()
    }

    /// One slide into the inner corner `(row, col)`: the hole repeatedly
    /// takes the smaller of the entries below it and to its right.
    pub fn slide(&self, row: usize, col: usize) -> Result<Tableau, TableauError> {
        if !self.inner_corners().contains(&(row, col)) {
            return Err(TableauError::NotInnerCorner { row, col });
        }
        let shape = self.shape();
        let mut grid: Vec<Vec<usize>> = (0..shape.rows())
            .map(|r| {
                let mut line = vec![0; shape.inner().part(r)];
                line.extend_from_slice(&self.rows()[r]);
                line
            })
            .collect();
        let mut inner: Vec<usize> = (0..shape.rows()).map(|r| shape.inner().part(r)).collect();
        inner[row - 1] -= 1;
        let (mut r, mut c) = (row - 1, col - 1);
        loop {
            let below = grid.get(r + 1).and_then(|line| line.get(c)).copied();
            let right = grid[r].get(c + 1).copied();
            let (nr, nc) = match (below, right) {
                (Some(b), Some(a)) if a < b => (r, c + 1),
                (Some(_), _) => (r + 1, c),
                (None, Some(_)) => (r, c + 1),
                (None, None) => break,
            };
            grid[r][c] = grid[nr][nc];
            r = nr;
            c = nc;
        }
        // the hole ends at an outer corner
        grid[r].pop();
        if grid[r].is_empty() {
            grid.truncate(r);
        }
        let outer = Partition::new(grid.iter().map(Vec::len).collect())?;
        let inner = Partition::from_padded(inner)?;
        let shape = SkewShape::new(outer, inner)?;
        Ok(grid_to_tableau(&shape, &grid))
    }

    /// `jdt(T)`, sliding into the bottom-most inner corner each time.
    pub fn jeu_de_taquin(&self) -> Result<Tableau, TableauError> {
        self.jeu_de_taquin_with(|corners| corners.len() - 1)
    }

    /// `jdt(T)` with `choose` picking the index of the next inner corner
    /// among those offered (listed top to bottom).
    pub fn jeu_de_taquin_with(
        &self,
        mut choose: impl FnMut(&[(usize, usize)]) -> usize,
    ) -> Result<Tableau, TableauError> {
        if !self.is_standard() {
            return Err(TableauError::NotStandard);
        }
        let mut t = self.clone();
        while !t.shape().is_straight() {
            let corners = t.inner_corners();
            let k = choose(&corners);
            let (r, c) = *corners.get(k).ok_or(TableauError::NotInnerCorner { row: 0, col: 0 })?;
            t = t.slide(r, c)?;
        }
        Ok(t)
    }

    /// Every result reachable by some sequence of inner-corner choices.
    /// A single element means the rectification is independent of the
    /// choices.
    pub fn jeu_de_taquin_all_orders(&self) -> Result<BTreeSet<Tableau>, TableauError> {
        if !self.is_standard() {
            return Err(TableauError::NotStandard);
        }
        let mut memo = HashMap::new();
        all_orders(self, &mut memo)
    }
}

fn all_orders(t: &Tableau, memo: &mut HashMap<Tableau, BTreeSet<Tableau>>) -> Result<BTreeSet<Tableau>, TableauError> {
    if t.shape().is_straight() {
        return Ok(BTreeSet::from([t.clone()]));
    }
    if let Some(done) = memo.get(t) {
        return Ok(done.clone());
    }
    let mut results = BTreeSet::new();
    for (r, c) in t.inner_corners() {
        results.extend(all_orders(&t.slide(r, c)?, memo)?);
    }
    memo.insert(t.clone(), results.clone());
    Ok(results)
}
