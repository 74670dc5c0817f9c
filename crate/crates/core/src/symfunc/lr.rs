//! Littlewood–Richardson coefficients, from tableaux of shape `μ` and from
//! jeu de taquin on skew shapes.

use std::collections::BTreeMap;

use crate::exact::Rat;
use crate::tableau::{standard_tableaux, Partition, SkewShape, Tableau, TableauError};

use super::{Basis, SymFn};

/// `ν ↦ c_{λμ}^ν`; only nonzero coefficients are stored.
pub type LrCoefficients = BTreeMap<Partition, usize>;

/// Semistandard tableaux `T` of shape `μ` such that `λ + c(T_j)` is a
/// partition for every column suffix `T_j`, `j = 1..=μ₁`. Sorted by reading
/// word.
///
/// Columns are filled right to left, so each suffix is checked as soon as it
/// is complete. Entries never exceed `ℓ(λ) + ℓ(μ)`: an entry `k` in row `r`
/// needs `λ_{k-1} > λ_k` after adding the entries of rows above, which fails
/// for `k > ℓ(λ) + r`.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition) -> Vec<Tableau> {
    let max_entry = lambda.len() + mu.len();
    let cols = mu.conjugate();
    let mut grid: Vec<Vec<usize>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
    let mut content = vec![0usize; max_entry];
    let mut out = Vec::new();
    if mu.is_empty() {
        return vec![Tableau::from_parts_unchecked(
            SkewShape::straight(Partition::empty()),
            Vec::new(),
        )];
    }
    fill_column(
        lambda,
        &cols,
        mu.first(),
        0,
        max_entry,
        &mut grid,
        &mut content,
        &mut out,
    );
    out.sort_by_key(Tableau::reading_word);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_column(
    lambda: &Partition,
    cols: &Partition,
    col: usize,
    row: usize,
    max_entry: usize,
    grid: &mut Vec<Vec<usize>>,
    content: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) {
    // col is 1-based and counts down; row is 0-based within the column
    if row == cols.part(col - 1) {
        if lambda.add_content(content).is_none() {
            return;
        }
        if col == 1 {
            let shape = SkewShape::straight(Partition::new(grid.iter().map(Vec::len).collect()).expect("shape"));
            out.push(Tableau::from_parts_unchecked(shape, grid.clone()));
            return;
        }
        fill_column(lambda, cols, col - 1, 0, max_entry, grid, content, out);
        return;
    }
    let c = col - 1;
    let low = if row == 0 { 1 } else { grid[row - 1][c] + 1 };
    let high = grid[row].get(c + 1).copied().unwrap_or(max_entry);
    for v in low..=high {
        grid[row][c] = v;
        content[v - 1] += 1;
        fill_column(lambda, cols, col, row + 1, max_entry, grid, content, out);
        content[v - 1] -= 1;
    }
    grid[row][c] = 0;
}

/// `s_λ s_μ = Σ_ν c_{λμ}^ν s_ν`, summing `s_{λ + c(T)}` over
/// [`lr_tableaux`].
pub fn lr_multiply(lambda: &Partition, mu: &Partition) -> LrCoefficients {
    let mut out = LrCoefficients::new();
    for t in lr_tableaux(lambda, mu) {
        let nu = lambda.add_content(&t.content()).expect("checked during the search");
        *out.entry(nu).or_insert(0) += 1;
    }
    out
}

/// `s_{ν/μ}` in the Schur basis: the coefficient of `s_λ` counts standard
/// tableaux of shape `ν/μ` whose rectification has shape `λ` and reading
/// word `1, 2, ..., |λ|`.
pub fn skew_schur_expand(shape: &SkewShape) -> Result<SymFn, TableauError> {
    let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
    for t in standard_tableaux(shape)? {
        let rect = t.jeu_de_taquin()?;
        if rect.reading_word().into_iter().eq(1..=rect.size()) {
            *counts.entry(rect.shape().outer().clone()).or_insert(0) += 1;
        }
    }
    Ok(SymFn::from_terms(
        Basis::S,
        counts.into_iter().map(|(k, c)| (k, Rat::from_integer(c.into()))),
    ))
}

/// `s_λ s_μ` as a Schur-basis [`SymFn`].
pub(crate) fn lr_as_symfn(coeffs: &LrCoefficients) -> SymFn {
    SymFn::from_terms(
        Basis::S,
        coeffs.iter().map(|(k, &c)| (k.clone(), Rat::from_integer(c.into()))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn nine_tableaux_for_31_times_21() {
        let ts = lr_tableaux(&p("3,1"), &p("2,1"));
        let shown: Vec<String> = ts
            .iter()
            .map(|t| {
                t.rows()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<String>())
                    .collect::<Vec<_>>()
                    .join("/")
            })
            .collect();
        assert_eq!(
            shown,
            ["11/2", "11/3", "12/2", "12/3", "13/2", "13/4", "22/3", "23/3", "23/4"]
        );
        let nus: Vec<String> = ts
            .iter()
            .map(|t| p("3,1").add_content(&t.content()).unwrap().to_string())
            .collect();
        assert_eq!(
            nus,
            ["5,2", "5,1,1", "4,3", "4,2,1", "4,2,1", "4,1,1,1", "3,3,1", "3,2,2", "3,2,1,1"]
        );
    }

    #[test]
    fn product_of_31_and_21() {
        let c = lr_multiply(&p("3,1"), &p("2,1"));
        assert_eq!(c.len(), 8);
        assert_eq!(c[&p("4,2,1")], 2);
        assert_eq!(c.values().sum::<usize>(), 9);
        assert!(c.keys().all(|nu| nu.size() == 7));
    }

    #[test]
    fn trivial_products() {
        assert_eq!(
            lr_multiply(&p("3,1"), &Partition::empty()),
            LrCoefficients::from([(p("3,1"), 1)])
        );
        assert_eq!(
            lr_multiply(&Partition::empty(), &p("2")),
            LrCoefficients::from([(p("2"), 1)])
        );
        assert_eq!(
            lr_multiply(&p("1"), &p("1")),
            LrCoefficients::from([(p("2"), 1), (p("1,1"), 1)])
        );
    }

    #[test]
    fn skew_321_over_21() {
        let f = skew_schur_expand(&SkewShape::parse("3,2,1/2,1").unwrap()).unwrap();
        assert_eq!(
            f,
            SymFn::from_int_terms(Basis::S, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        let g = skew_schur_expand(&SkewShape::parse("5,2/1").unwrap()).unwrap();
        assert_eq!(g, SymFn::from_int_terms(Basis::S, &[(&[4, 2], 1), (&[5, 1], 1)]));
        let straight = skew_schur_expand(&SkewShape::parse("3,1").unwrap()).unwrap();
        assert_eq!(straight, SymFn::from_int_terms(Basis::S, &[(&[3, 1], 1)]));
    }

    #[test]
    fn two_avatars_agree() {
        for n in 0..=6 {
            for nu in Partition::all(n) {
                for k in 0..=n {
                    for mu in Partition::all(k).into_iter().filter(|m| nu.contains(m)) {
                        let skew = skew_schur_expand(&SkewShape::new(nu.clone(), mu.clone()).unwrap()).unwrap();
                        for lambda in Partition::all(n - k) {
                            let c = lr_multiply(&lambda, &mu).get(&nu).copied().unwrap_or(0);
                            assert_eq!(
                                skew.coeff(&lambda),
                                Rat::from_integer(c.into()),
                                "{nu}/{mu} at {lambda}"
                            );
                        }
                    }
                }
            }
        }
    }
}
