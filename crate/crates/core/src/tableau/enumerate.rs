use super::{SkewShape, Tableau, TableauError};

/// Default bound on the number of tableaux an enumeration may produce.
pub const DEFAULT_TABLEAU_CAP: usize = 1_000_000;

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`,
/// in lexicographic order of their reading words.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Result<Vec<Tableau>, TableauError> {
    enumerate_ssyt_with_cap(shape, max_entry, DEFAULT_TABLEAU_CAP)
}

pub fn enumerate_ssyt_with_cap(shape: &SkewShape, max_entry: usize, cap: usize) -> Result<Vec<Tableau>, TableauError> {
    if max_entry == 0 {
        return Err(TableauError::ZeroEntry);
    }
    let cells = shape.cells();
    let mut grid: Vec<Vec<usize>> = (0..shape.rows()).map(|r| vec![0; shape.outer().part(r)]).collect();
    let mut out = Vec::new();
    fill_ssyt(shape, &cells, 0, max_entry, &mut grid, &mut out, cap)?;
    Ok(out)
}

fn fill_ssyt(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    k: usize,
    max_entry: usize,
    grid: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
    cap: usize,
) -> Result<(), TableauError> {
    if k == cells.len() {
        if out.len() == cap {
            return Err(TableauError::TooMany(cap));
        }
        out.push(grid_to_tableau(shape, grid));
        return Ok(());
    }
    let (r, c) = (cells[k].0 - 1, cells[k].1 - 1);
    let mut low = 1;
    if c > shape.inner().part(r) {
        low = low.max(grid[r][c - 1]);
    }
    if r > 0 && c >= shape.inner().part(r - 1) {
        low = low.max(grid[r - 1][c] + 1);
    }
    for v in low..=max_entry {
        grid[r][c] = v;
        fill_ssyt(shape, cells, k + 1, max_entry, grid, out, cap)?;
    }
    grid[r][c] = 0;
    Ok(())
}

pub(crate) fn grid_to_tableau(shape: &SkewShape, grid: &[Vec<usize>]) -> Tableau {
    let rows = grid
        .iter()
        .enumerate()
        .map(|(r, row)| row[shape.inner().part(r)..].to_vec())
        .collect();
    Tableau::from_parts_unchecked(shape.clone(), rows)
}

/// All standard tableaux of `shape`, in lexicographic order of their
/// reading words.
pub fn standard_tableaux(shape: &SkewShape) -> Result<Vec<Tableau>, TableauError> {
    let n = shape.size();
    let mut grid: Vec<Vec<usize>> = (0..shape.rows()).map(|r| vec![0; shape.outer().part(r)]).collect();
    let mut out = Vec::new();
    place(shape, 1, n, &mut grid, &mut out)?;
    out.sort_by_key(Tableau::reading_word);
    Ok(out)
}

fn place(
    shape: &SkewShape,
    next: usize,
    n: usize,
    grid: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) -> Result<(), TableauError> {
    if next > n {
        if out.len() == DEFAULT_TABLEAU_CAP {
            return Err(TableauError::TooMany(DEFAULT_TABLEAU_CAP));
        }
        out.push(grid_to_tableau(shape, grid));
        return Ok(());
    }
    for r in 0..shape.rows() {
        let inner = shape.inner().part(r);
        // the next free cell of row r, if its upper neighbour is settled
        let Some(c) = (inner..shape.outer().part(r)).find(|&c| grid[r][c] == 0) else {
            continue;
        };
        let above_ready = r == 0 || c < shape.inner().part(r - 1) || grid[r - 1][c] != 0;
        if !above_ready {
            continue;
        }
        grid[r][c] = next;
        place(shape, next + 1, n, grid, out)?;
        grid[r][c] = 0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Partition;

    fn shape(text: &str) -> SkewShape {
        SkewShape::parse(text).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ssyt(&shape("1"), 3).unwrap().len(), 3);
        let two_two = enumerate_ssyt(&shape("2,2"), 2).unwrap();
        assert_eq!(two_two, vec![Tableau::from_rows(vec![vec![1, 1], vec![2, 2]]).unwrap()]);
        // semistandard fillings of (2,1) with entries <= 3 number 8
        assert_eq!(enumerate_ssyt(&shape("2,1"), 3).unwrap().len(), 8);
        assert!(enumerate_ssyt(&shape("2,1"), 0).is_err());
        assert!(matches!(
            enumerate_ssyt_with_cap(&shape("3"), 4, 5),
            Err(TableauError::TooMany(5))
        ));
    }

    #[test]
    fn ordering_is_lexicographic_in_reading_word() {
        let all = enumerate_ssyt(&shape("2,1"), 3).unwrap();
        let words: Vec<Vec<usize>> = all.iter().map(Tableau::reading_word).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(all.iter().all(Tableau::is_semistandard));
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux(&shape("3,2,1/2,1")).unwrap().len(), 6);
        assert_eq!(standard_tableaux(&shape("3,2,1")).unwrap().len(), 16);
        assert_eq!(standard_tableaux(&shape("4,3,2/2,1")).unwrap().len(), 61);
        let straight = SkewShape::straight(Partition::empty());
        assert_eq!(standard_tableaux(&straight).unwrap().len(), 1);
        assert!(standard_tableaux(&shape("3,3"))
            .unwrap()
            .iter()
            .all(Tableau::is_standard));
    }

    /// Brute force: every filling with values in 1..=m, filtered.
    fn brute_count(s: &SkewShape, m: usize) -> usize {
        let cells = s.cells();
        let total = m.pow(cells.len() as u32);
        (0..total)
            .filter(|&code| {
                let mut code = code;
                let mut rows: Vec<Vec<usize>> = (0..s.rows()).map(|r| Vec::with_capacity(s.row_len(r))).collect();
                for &(r, _) in &cells {
                    rows[r - 1].push(code % m + 1);
                    code /= m;
                }
                Tableau::new(s.clone(), rows).unwrap().is_semistandard()
            })
            .count()
    }

    #[test]
    fn matches_brute_force() {
        for text in ["2,2", "3,1", "2,1,1", "3,2/1", "2,2/1", "3,1/1"] {
            let s = shape(text);
            for m in 1..=3 {
                assert_eq!(enumerate_ssyt(&s, m).unwrap().len(), brute_count(&s, m), "{text} {m}");
            }
        }
    }
}
