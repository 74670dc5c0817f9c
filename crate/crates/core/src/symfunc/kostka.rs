//! Pieri and Murnaghan–Nakayama rules.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::Rat;
use crate::tableau::Partition;

/// All `ν ⊇ λ` such that `ν/λ` is a horizontal strip with `k` cells.
pub(crate) fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    strips(lambda, k, 0, rows, &mut current, &mut out);
    out
}

fn strips(
    lambda: &Partition,
    remaining: usize,
    row: usize,
    rows: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == rows {
        if remaining == 0 {
            out.push(Partition::from_padded(current.clone()).expect("strip keeps a partition"));
        }
        return;
    }
    let base = lambda.part(row);
    // the new row may reach the old length of the row above
    let cap = if row == 0 {
        remaining
    } else {
        (lambda.part(row - 1) - base).min(remaining)
    };
    for add in (0..=cap).rev() {
        current.push(base + add);
        strips(lambda, remaining - add, row + 1, rows, current, out);
        current.pop();
    }
}

/// `h_μ` in the Schur basis: the coefficient of `s_λ` is the Kostka number
/// `K_λμ`.
pub(crate) fn h_in_schur(mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut acc = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &k in mu.parts() {
        let mut next = BTreeMap::new();
        for (lambda, c) in &acc {
            for nu in horizontal_strips(lambda, k) {
                *next.entry(nu).or_insert_with(BigInt::default) += c;
            }
        }
        acc = next;
    }
    acc
}

/// `K_λμ`: semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> BigInt {
    h_in_schur(mu).remove(lambda).unwrap_or_default()
}

/// Shapes `ν ⊇ λ` with `ν/λ` a border strip of `k` cells, with the sign
/// `(-1)^(height)`, computed on beta-numbers.
pub(crate) fn border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len() + k;
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let target = b + k;
        if beta.contains(&target) {
            continue;
        }
        let passed = beta.iter().filter(|&&x| x > b && x < target).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_padded(parts).expect("beta-set gives a partition"), sign));
    }
    out
}

/// `p_ρ` in the Schur basis; the coefficient of `s_λ` is `χ^λ(ρ)`.
pub(crate) fn p_in_schur(rho: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut acc = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &k in rho.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (lambda, c) in &acc {
            for (nu, sign) in border_strips(lambda, k) {
                *next.entry(nu).or_default() += c * sign;
            }
        }
        next.retain(|_, v| *v != BigInt::default());
        acc = next;
    }
    acc
}

/// The irreducible character `χ^λ` at cycle type `ρ`.
pub fn character(lambda: &Partition, rho: &Partition) -> BigInt {
    p_in_schur(rho).remove(lambda).unwrap_or_default()
}

/// `z_ρ = Π i^(m_i) m_i!`, the centralizer size of cycle type `ρ`.
pub(crate) fn z(rho: &Partition) -> Rat {
    let mut counts = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_insert(0u32) += 1;
    }
    let mut out = BigInt::one();
    for (part, m) in counts {
        out *= BigInt::from(part).pow(m);
        for t in 2..=m {
            out *= t;
        }
    }
    Rat::from_integer(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_ssyt, SkewShape};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kostka_matches_tableau_count() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                let tableaux = enumerate_ssyt(&SkewShape::straight(lambda.clone()), n).unwrap();
                for mu in Partition::all(n) {
                    let mut content = mu.parts().to_vec();
                    content.resize(n, 0);
                    let count = tableaux.iter().filter(|t| t.content_padded(n) == content).count();
                    assert_eq!(kostka_number(&lambda, &mu), BigInt::from(count), "K {lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn characters_of_s4() {
        // row lambda = (4),(3,1),(2,2),(2,1,1),(1,1,1,1); column rho = (1^4)
        let dims: Vec<BigInt> = Partition::all(4)
            .iter()
            .map(|l| character(l, &p(&[1, 1, 1, 1])))
            .collect();
        assert_eq!(dims, [1, 3, 2, 3, 1].map(BigInt::from));
        // p_4 = s_4 - s_31 + s_22 - s_211 + s_1111
        let row: Vec<BigInt> = Partition::all(4).iter().map(|l| character(l, &p(&[4]))).collect();
        assert_eq!(row, [1, -1, 0, 1, -1].map(BigInt::from));
    }

    #[test]
    fn column_orthogonality() {
        let n = 5;
        let all = Partition::all(n);
        for a in &all {
            for b in &all {
                let sum: BigInt = all.iter().map(|l| character(l, a) * character(l, b)).sum();
                let expected = if a == b { z(a).to_integer() } else { BigInt::default() };
                assert_eq!(sum, expected);
            }
        }
    }

    #[test]
    fn strip_counts() {
        assert_eq!(horizontal_strips(&p(&[2, 1]), 2).len(), 4);
        assert_eq!(border_strips(&Partition::empty(), 3).len(), 3);
        assert_eq!(z(&p(&[2, 2, 1])), Rat::from_integer(8.into()));
    }
}
