//! Basis changes and arithmetic, with shared caches.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::Rat;
use crate::tableau::{Partition, SkewShape};

use super::kostka::{h_in_schur, p_in_schur, z};
use super::lr::{lr_as_symfn, lr_multiply, skew_schur_expand};
use super::parse::{parse_expr, Expr};
use super::{Basis, LrCoefficients, SymError, SymFn};

pub const DEFAULT_DEGREE_BOUND: usize = 20;

/// Outcome of a Schur-positivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurPositivity {
    pub positive: bool,
    /// The first negative Schur coefficient in output order, if any.
    pub witness: Option<(Partition, Rat)>,
    /// The function in the Schur basis.
    pub schur: SymFn,
}

/// Kostka matrix of one degree, partitions in lexicographically decreasing
/// order. `k[i][j] = K_{λ_i μ_j}` is upper unitriangular.
struct KostkaTable {
    index: HashMap<Partition, usize>,
    partitions: Vec<Partition>,
    k: Vec<Vec<BigInt>>,
    inverse: Vec<Vec<BigInt>>,
}

impl KostkaTable {
    fn new(n: usize) -> Self {
        let partitions = Partition::all(n);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let size = partitions.len();
        let mut k = vec![vec![BigInt::zero(); size]; size];
        for (j, mu) in partitions.iter().enumerate() {
            for (lambda, c) in h_in_schur(mu) {
                k[index[&lambda]][j] = c;
            }
        }
        let mut inverse = vec![vec![BigInt::zero(); size]; size];
        for j in 0..size {
            inverse[j][j] = BigInt::one();
            for i in (0..j).rev() {
                let s: BigInt = (i + 1..=j).map(|m| &k[i][m] * &inverse[m][j]).sum();
                inverse[i][j] = -s;
            }
        }
        KostkaTable {
            index,
            partitions,
            k,
            inverse,
        }
    }
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

fn cached<K: Eq + Hash + Clone, V>(cache: &Cache<K, V>, key: &K, make: impl FnOnce() -> V) -> Arc<V> {
    if let Some(v) = cache.read().expect("cache lock").get(key) {
        return v.clone();
    }
    let v = Arc::new(make());
    cache
        .write()
        .expect("cache lock")
        .entry(key.clone())
        .or_insert(v)
        .clone()
}

/// The ring of symmetric functions up to a fixed degree.
///
/// Every conversion goes through the Schur basis. Transition data and
/// Littlewood–Richardson coefficients are cached behind locks, so one
/// algebra can be shared between threads.
pub struct SymAlgebra {
    bound: usize,
    kostka: Cache<usize, KostkaTable>,
    power: Cache<Partition, std::collections::BTreeMap<Partition, BigInt>>,
    lr: Cache<(Partition, Partition), LrCoefficients>,
}

impl Default for SymAlgebra {
    fn default() -> Self {
        Self::new(DEFAULT_DEGREE_BOUND)
    }
}

impl SymAlgebra {
    pub fn new(degree_bound: usize) -> Self {
        SymAlgebra {
            bound: degree_bound,
            kostka: RwLock::default(),
            power: RwLock::default(),
            lr: RwLock::default(),
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.bound
    }

    fn check(&self, degree: usize) -> Result<(), SymError> {
        if degree > self.bound {
            return Err(SymError::DegreeBound {
                degree,
                bound: self.bound,
            });
        }
        Ok(())
    }

    fn table(&self, n: usize) -> Arc<KostkaTable> {
        cached(&self.kostka, &n, || KostkaTable::new(n))
    }

    /// `c_{λμ}^ν` for all `ν`, cached.
    pub fn lr(&self, lambda: &Partition, mu: &Partition) -> Result<Arc<LrCoefficients>, SymError> {
        self.check(lambda.size() + mu.size())?;
        let key = if lambda <= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        Ok(cached(&self.lr, &key, || lr_multiply(lambda, mu)))
    }

    /// `s_{ν/μ}` in the Schur basis.
    pub fn skew_schur(&self, shape: &SkewShape) -> Result<SymFn, SymError> {
        self.check(shape.outer().size())?;
        Ok(skew_schur_expand(shape)?)
    }

    fn element_to_schur(&self, basis: Basis, mu: &Partition) -> SymFn {
        let int = |c: &BigInt| Rat::from_integer(c.clone());
        match basis {
            Basis::S => SymFn::element(Basis::S, mu.clone()),
            Basis::H => SymFn::from_terms(Basis::S, h_in_schur(mu).iter().map(|(l, c)| (l.clone(), int(c)))),
            Basis::E => SymFn::from_terms(Basis::S, h_in_schur(mu).iter().map(|(l, c)| (l.conjugate(), int(c)))),
            Basis::P => {
                let row = cached(&self.power, mu, || p_in_schur(mu));
                SymFn::from_terms(Basis::S, row.iter().map(|(l, c)| (l.clone(), int(c))))
            }
            Basis::M => {
                let t = self.table(mu.size());
                let i = t.index[mu];
                SymFn::from_terms(
                    Basis::S,
                    t.partitions
                        .iter()
                        .enumerate()
                        .map(|(j, l)| (l.clone(), int(&t.inverse[i][j]))),
                )
            }
        }
    }

    fn schur_to_element(&self, target: Basis, lambda: &Partition) -> SymFn {
        let int = |c: &BigInt| Rat::from_integer(c.clone());
        let n = lambda.size();
        match target {
            Basis::S => SymFn::element(Basis::S, lambda.clone()),
            Basis::M => {
                let t = self.table(n);
                let i = t.index[lambda];
                SymFn::from_terms(
                    Basis::M,
                    t.partitions
                        .iter()
                        .enumerate()
                        .map(|(j, m)| (m.clone(), int(&t.k[i][j]))),
                )
            }
            Basis::H | Basis::E => {
                let t = self.table(n);
                let source = if target == Basis::H {
                    lambda.clone()
                } else {
                    lambda.conjugate()
                };
                let j = t.index[&source];
                SymFn::from_terms(
                    target,
                    t.partitions
                        .iter()
                        .enumerate()
                        .map(|(i, m)| (m.clone(), int(&t.inverse[i][j]))),
                )
            }
            Basis::P => SymFn::from_terms(
                Basis::P,
                Partition::all(n).into_iter().map(|rho| {
                    let row = cached(&self.power, &rho, || p_in_schur(&rho));
                    let chi = row.get(lambda).cloned().unwrap_or_default();
                    let c = int(&chi) / z(&rho);
                    (rho, c)
                }),
            ),
        }
    }

    /// `f` re-expressed in `target`.
    pub fn convert(&self, f: &SymFn, target: Basis) -> Result<SymFn, SymError> {
        self.check(f.degree())?;
        if f.basis() == target {
            return Ok(f.clone());
        }
        let schur = if f.basis() == Basis::S {
            f.clone()
        } else {
            let mut s = SymFn::zero(Basis::S);
            for (mu, c) in f.terms() {
                s = add_scaled(&s, &self.element_to_schur(f.basis(), mu), c);
            }
            s
        };
        if target == Basis::S {
            return Ok(schur);
        }
        let mut out = SymFn::zero(target);
        for (lambda, c) in schur.terms() {
            out = add_scaled(&out, &self.schur_to_element(target, lambda), c);
        }
        Ok(out)
    }

    /// `f + g` in the basis of `f`.
    pub fn add(&self, f: &SymFn, g: &SymFn) -> Result<SymFn, SymError> {
        let g = self.convert(g, f.basis())?;
        self.check(f.degree())?;
        Ok(add_scaled(f, &g, &Rat::one()))
    }

    /// `f - g` in the basis of `f`.
    pub fn sub(&self, f: &SymFn, g: &SymFn) -> Result<SymFn, SymError> {
        let g = self.convert(g, f.basis())?;
        self.check(f.degree())?;
        Ok(add_scaled(f, &g, &-Rat::one()))
    }

    /// `f g` in the basis of `f`, computed with Littlewood–Richardson
    /// coefficients.
    pub fn mul(&self, f: &SymFn, g: &SymFn) -> Result<SymFn, SymError> {
        if f.is_zero() || g.is_zero() {
            return Ok(SymFn::zero(f.basis()));
        }
        self.check(f.degree() + g.degree())?;
        let a = self.convert(f, Basis::S)?;
        let b = self.convert(g, Basis::S)?;
        let mut out = SymFn::zero(Basis::S);
        for (lambda, x) in a.terms() {
            for (mu, y) in b.terms() {
                let coeffs = self.lr(lambda, mu)?;
                out = add_scaled(&out, &lr_as_symfn(&coeffs), &(x * y));
            }
        }
        self.convert(&out, f.basis())
    }

    /// `f^k`, with `f^0 = 1`.
    pub fn pow(&self, f: &SymFn, k: u32) -> Result<SymFn, SymError> {
        if k > 0 && !f.is_zero() {
            self.check(f.degree() * k as usize)?;
        }
        let mut out = SymFn::one(f.basis());
        for _ in 0..k {
            out = self.mul(&out, f)?;
        }
        Ok(out)
    }

    /// Whether every Schur coefficient of `f` is nonnegative.
    pub fn is_schur_positive(&self, f: &SymFn) -> Result<SchurPositivity, SymError> {
        let schur = self.convert(f, Basis::S)?;
        let witness = schur
            .sorted_terms()
            .into_iter()
            .find(|(_, c)| **c < Rat::zero())
            .map(|(k, c)| (k.clone(), c.clone()));
        Ok(SchurPositivity {
            positive: witness.is_none(),
            witness,
            schur,
        })
    }

    /// `s_{i+3,i/1} s_{i+1} - s_{i+2,i+1} s_i` in the Schur basis.
    pub fn schur_positive_difference(&self, i: usize) -> Result<SymFn, SymError> {
        self.check(2 * i + 3)?;
        let part = |v: Vec<usize>| Partition::from_padded(v).expect("partition");
        let skew = SkewShape::new(part(vec![i + 3, i]), part(vec![1]))?;
        let left = self.mul(&self.skew_schur(&skew)?, &SymFn::element(Basis::S, part(vec![i + 1])))?;
        let right = self.mul(
            &SymFn::element(Basis::S, part(vec![i + 2, i + 1])),
            &SymFn::element(Basis::S, part(vec![i])),
        )?;
        self.sub(&left, &right)
    }

    /// Evaluates an expression such as `s[3,1]*s[2,1] - h[4]` and returns
    /// the result in `target`.
    pub fn eval(&self, text: &str, target: Basis) -> Result<SymFn, SymError> {
        let e = parse_expr(text)?;
        let f = self.eval_expr(&e)?;
        self.convert(&f, target)
    }

    fn eval_expr(&self, e: &Expr) -> Result<SymFn, SymError> {
        Ok(match e {
            Expr::Number(c) => SymFn::from_terms(Basis::S, [(Partition::empty(), c.clone())]),
            Expr::Atom { basis, outer, inner } => match inner {
                Some(inner) => self.skew_schur(&SkewShape::new(outer.clone(), inner.clone())?)?,
                None => {
                    self.check(outer.size())?;
                    SymFn::element(*basis, outer.clone())
                }
            },
            Expr::Neg(a) => self.eval_expr(a)?.scale(&-Rat::one()),
            Expr::Add(a, b) => self.add(&self.to_schur(a)?, &self.eval_expr(b)?)?,
            Expr::Sub(a, b) => self.sub(&self.to_schur(a)?, &self.eval_expr(b)?)?,
            Expr::Mul(a, b) => self.mul(&self.to_schur(a)?, &self.eval_expr(b)?)?,
            Expr::Pow(a, k) => self.pow(&self.to_schur(a)?, *k)?,
        })
    }

    fn to_schur(&self, e: &Expr) -> Result<SymFn, SymError> {
        let f = self.eval_expr(e)?;
        self.convert(&f, Basis::S)
    }
}

fn add_scaled(f: &SymFn, g: &SymFn, c: &Rat) -> SymFn {
    let mut out = f.clone();
    for (k, v) in g.terms() {
        out.add_term(k.clone(), v * c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn sym(basis: Basis, terms: &[(&[usize], i64)]) -> SymFn {
        SymFn::from_int_terms(basis, terms)
    }

    #[test]
    fn displayed_conversions() {
        let a = SymAlgebra::default();
        let e4 = a.convert(&sym(Basis::E, &[(&[4], 1)]), Basis::H).unwrap();
        assert_eq!(
            e4,
            sym(
                Basis::H,
                &[
                    (&[4], -1),
                    (&[3, 1], 2),
                    (&[2, 2], 1),
                    (&[2, 1, 1], -3),
                    (&[1, 1, 1, 1], 1)
                ]
            )
        );
        let h4 = a.convert(&sym(Basis::H, &[(&[4], 1)]), Basis::P).unwrap();
        let expected = [
            (&[4][..], ratio(1, 4)),
            (&[3, 1], ratio(1, 3)),
            (&[2, 2], ratio(1, 8)),
            (&[2, 1, 1], ratio(1, 4)),
            (&[1, 1, 1, 1], ratio(1, 24)),
        ];
        assert_eq!(
            h4,
            SymFn::from_terms(
                Basis::P,
                expected
                    .iter()
                    .map(|(p, c)| (Partition::new(p.to_vec()).unwrap(), c.clone()))
            )
        );
        let p4 = a.convert(&sym(Basis::P, &[(&[4], 1)]), Basis::S).unwrap();
        // the hook characters of S_4 at a 4-cycle; s_22 does not occur
        assert_eq!(
            p4,
            sym(
                Basis::S,
                &[(&[4], 1), (&[3, 1], -1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], -1)]
            )
        );
        let p4e = a.convert(&sym(Basis::P, &[(&[4], 1)]), Basis::E).unwrap();
        assert_eq!(
            p4e,
            sym(
                Basis::E,
                &[
                    (&[4], -4),
                    (&[3, 1], 4),
                    (&[2, 2], 2),
                    (&[2, 1, 1], -4),
                    (&[1, 1, 1, 1], 1)
                ]
            )
        );
    }

    #[test]
    fn round_trips_in_degree_five() {
        let a = SymAlgebra::default();
        for from in Basis::ALL {
            for to in Basis::ALL {
                for lambda in Partition::all(5) {
                    let f = SymFn::element(from, lambda.clone());
                    let back = a.convert(&a.convert(&f, to).unwrap(), from).unwrap();
                    assert_eq!(back, f, "{from} -> {to} at {lambda}");
                }
            }
        }
    }

    #[test]
    fn positivity_examples() {
        let a = SymAlgebra::default();
        let p4 = a.is_schur_positive(&sym(Basis::P, &[(&[4], 1)])).unwrap();
        assert!(!p4.positive);
        assert_eq!(p4.witness, Some((Partition::new(vec![3, 1]).unwrap(), -Rat::one())));
        let e4 = a.is_schur_positive(&sym(Basis::E, &[(&[4], 1)])).unwrap();
        assert!(e4.positive);
        assert_eq!(e4.schur, sym(Basis::S, &[(&[1, 1, 1, 1], 1)]));
    }

    #[test]
    fn prop_5_1_differences() {
        let a = SymAlgebra::default();
        let d1 = a.schur_positive_difference(1).unwrap();
        assert_eq!(
            d1,
            sym(Basis::S, &[(&[6], 1), (&[5, 1], 2), (&[4, 2], 1), (&[4, 1, 1], 1)])
        );
        let d2 = a.schur_positive_difference(2).unwrap();
        assert_eq!(
            d2,
            sym(
                Basis::S,
                &[
                    (&[8, 1], 1),
                    (&[7, 2], 2),
                    (&[7, 1, 1], 1),
                    (&[6, 3], 1),
                    (&[6, 2, 1], 2),
                    (&[5, 4], 1),
                    (&[5, 3, 1], 1),
                    (&[5, 2, 2], 1)
                ]
            )
        );
        assert!(a.is_schur_positive(&d2).unwrap().positive);
    }

    /// The same difference from Jacobi–Trudi determinants, multiplied in the
    /// h basis by concatenating partitions; no Littlewood–Richardson
    /// coefficients are involved.
    fn difference_by_jacobi_trudi(a: &SymAlgebra, i: usize) -> SymFn {
        let h_times = |f: &SymFn, k: usize| {
            SymFn::from_terms(
                Basis::H,
                f.terms().iter().map(|(p, c)| {
                    let mut parts = p.parts().to_vec();
                    parts.push(k);
                    parts.sort_unstable_by(|x, y| y.cmp(x));
                    (Partition::from_padded(parts).unwrap(), c.clone())
                }),
            )
        };
        let skew = SkewShape::parse(&format!("{},{}/1", i + 3, i)).unwrap();
        let left = h_times(&super::super::jacobi_trudi(&skew).determinant().unwrap(), i + 1);
        let straight = SkewShape::parse(&format!("{},{}", i + 2, i + 1)).unwrap();
        let right = h_times(&super::super::jacobi_trudi(&straight).determinant().unwrap(), i);
        a.convert(&add_scaled(&left, &right, &-Rat::one()), Basis::S).unwrap()
    }

    #[test]
    fn differences_agree_with_jacobi_trudi() {
        let a = SymAlgebra::default();
        for i in 1..=4 {
            assert_eq!(
                a.schur_positive_difference(i).unwrap(),
                difference_by_jacobi_trudi(&a, i),
                "i = {i}"
            );
        }
        // the third difference has coefficient 2 at s_831
        let d3 = a.schur_positive_difference(3).unwrap();
        assert_eq!(
            d3.coeff(&Partition::new(vec![8, 3, 1]).unwrap()),
            Rat::from_integer(2.into())
        );
        assert_eq!(d3.len(), 13);
    }

    #[test]
    fn expressions() {
        let a = SymAlgebra::default();
        let f = a.eval("s[4,1/1]*s[2] - s[3,2]*s[1]", Basis::S).unwrap();
        assert_eq!(f, a.schur_positive_difference(1).unwrap());
        let g = a.eval("(e[1] - 1/2)^2", Basis::E).unwrap();
        let expected = [(vec![1, 1], Rat::one()), (vec![1], -Rat::one()), (vec![], ratio(1, 4))];
        assert_eq!(
            g,
            SymFn::from_terms(Basis::E, expected.map(|(p, c)| (Partition::new(p).unwrap(), c)))
        );
        assert!(a.eval("h[0]", Basis::S).is_err());
        assert!(matches!(
            SymAlgebra::new(4).eval("h[3]*h[2]", Basis::S),
            Err(SymError::DegreeBound { degree: 5, bound: 4 })
        ));
    }

    #[test]
    fn multiplicative_bases_multiply_by_concatenation() {
        let a = SymAlgebra::default();
        let f = a
            .mul(&sym(Basis::H, &[(&[2, 1], 1)]), &sym(Basis::H, &[(&[3], 2)]))
            .unwrap();
        assert_eq!(f, sym(Basis::H, &[(&[3, 2, 1], 2)]));
        let g = a
            .mul(&sym(Basis::P, &[(&[2], 1)]), &sym(Basis::P, &[(&[2], 1)]))
            .unwrap();
        assert_eq!(g, sym(Basis::P, &[(&[2, 2], 1)]));
        assert_eq!(a.pow(&sym(Basis::E, &[(&[1], 1)]), 0).unwrap(), SymFn::one(Basis::E));
    }
}
