//! Acceptance criteria 1-16. Each criterion runs under its time limit and
//! prints one `PASS`/`FAIL` line; the test fails if any criterion fails.
//!
//! Run with `cargo test -p tnnkit --test acceptance -- --nocapture` to see
//! the report.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tnnkit::exact::{
    char_poly, is_totally_nonnegative, is_totally_positive, minor, neville_factorize, rat, ratio, IndexSet, Matrix,
    MinorTest, Rat,
};
use tnnkit::ineq::{poset, poset_with, Coloring, Method};
use tnnkit::network::{concatenate, network_from_tnn, vandermonde_matrix};
use tnnkit::random::{random_grid_network, random_invertible_tnn_matrix, random_tnn_matrix};
use tnnkit::roots::{
    certify_real_distinct, real_root_count_with_multiplicity, sturm_real_root_count, toeplitz_refute, ToeplitzVerdict,
};
use tnnkit::symfunc::{lr_multiply, skew_schur_expand, SymAlgebra};
use tnnkit::tableau::{standard_tableaux, Partition, SkewShape, Tableau};
use tnnkit::{Basis, Poly, SymFn};

type Check = Result<(), String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sym(basis: Basis, terms: &[(&[usize], i64)]) -> SymFn {
    SymFn::from_int_terms(basis, terms)
}

fn sym_rat(basis: Basis, terms: &[(&[usize], Rat)]) -> SymFn {
    SymFn::from_terms(
        basis,
        terms
            .iter()
            .map(|(p, c)| (Partition::new(p.to_vec()).unwrap(), c.clone())),
    )
}

fn one_line(f: &SymFn) -> String {
    f.to_string().trim_end().replace('\n', " + ")
}

fn matrix_21() -> Matrix {
    Matrix::from_i64(&[[5, 6, 3, 0], [4, 7, 4, 0], [1, 4, 4, 2], [0, 1, 2, 3]])
}

fn set(s: &str) -> IndexSet {
    IndexSet::parse(s).unwrap()
}

fn c1_minor() -> Check {
    let value = minor(&matrix_21(), &set("1,2"), &set("1,3")).map_err(|e| e.to_string())?;
    ensure(value == rat(8), || format!("got {value}"))
}

fn c2_tnn() -> Check {
    let test = is_totally_nonnegative(&matrix_21()).map_err(|e| e.to_string())?;
    let empty = minor(&matrix_21(), &IndexSet::empty(), &IndexSet::empty()).map_err(|e| e.to_string())?;
    ensure(empty == rat(1), || "empty minor is not 1".into())?;
    ensure(test == MinorTest::Holds { minors_checked: 69 }, || format!("{test:?}"))
}

fn c3_concatenation() -> Check {
    let a = Matrix::from_i64(&[[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [1, 1, 1, 1]]);
    let b = Matrix::from_i64(&[[1, 0, 0, 0], [2, 1, 0, 0], [3, 2, 1, 0], [4, 3, 2, 1]]);
    ensure(&a * &a == b, || "A^2 != B".into())?;
    let g = network_from_tnn(&a).map_err(|e| e.to_string())?;
    ensure(g.weight_matrix().map_err(|e| e.to_string())? == a, || {
        "network does not realize A".into()
    })?;
    let gg = concatenate(&g, &g).map_err(|e| e.to_string())?;
    gg.validate().map_err(|v| format!("{v:?}"))?;
    let w = gg.weight_matrix().map_err(|e| e.to_string())?;
    ensure(w == b, || format!("concatenation has weight matrix\n{w}"))
}

fn c4_lindstrom() -> Check {
    let mut rng = StdRng::seed_from_u64(4);
    for sample in 0..200 {
        let n = rng.gen_range(1..=3);
        let columns = rng.gen_range(1..=4);
        let g = random_grid_network(&mut rng, n, columns, 12);
        ensure(g.edges.len() <= 12, || {
            format!("sample {sample}: {} edges", g.edges.len())
        })?;
        g.validate().map_err(|v| format!("sample {sample}: {v:?}"))?;
        let w = g.weight_matrix().map_err(|e| e.to_string())?;
        for k in 1..=n {
            for rows in IndexSet::subsets(n, k) {
                for cols in IndexSet::subsets(n, k) {
                    let det = minor(&w, &rows, &cols).map_err(|e| e.to_string())?;
                    let families = g.disjoint_family_weight(&rows, &cols).map_err(|e| e.to_string())?;
                    ensure(det == families, || {
                        format!("sample {sample}: {rows} {cols}: {det} vs {families}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn c5_neville() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    for sample in 0..100 {
        let n = rng.gen_range(1..=4);
        let m = random_invertible_tnn_matrix(&mut rng, n);
        let f = neville_factorize(&m).map_err(|e| format!("sample {sample}: {e}"))?;
        ensure(f.product() == m, || format!("sample {sample}: product differs"))?;
        let nonneg = f
            .lower
            .iter()
            .chain(&f.upper)
            .map(|e| &e.value)
            .chain(&f.diagonal)
            .all(|c| *c >= rat(0));
        ensure(nonneg, || format!("sample {sample}: negative parameter"))?;
    }
    Ok(())
}

fn c6_vandermonde() -> Check {
    let x: Vec<Rat> = (1..=4).map(rat).collect();
    let (x1, x2, x3, x4) = (&x[0], &x[1], &x[2], &x[3]);
    let zero = rat(0);
    let one = rat(1);
    let m = |rows: [[&Rat; 4]; 4]| {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&c| c.clone()).collect()).collect()).unwrap()
    };
    let l1 = Matrix::from_i64(&[[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [1, 1, 1, 1]]);
    let (a, b, c) = ((x3 - x2) / (x2 - x1), (x4 - x3) / (x2 - x1), (x4 - x3) / (x3 - x2));
    let l2 = m([
        [&one, &zero, &zero, &zero],
        [&zero, &one, &zero, &zero],
        [&zero, &a, &one, &zero],
        [&zero, &b, &c, &one],
    ]);
    let d3 = (x4 - x3) * (x4 - x2) / ((x3 - x2) * (x3 - x1));
    let l3 = m([
        [&one, &zero, &zero, &zero],
        [&zero, &one, &zero, &zero],
        [&zero, &zero, &one, &zero],
        [&zero, &zero, &d3, &one],
    ]);
    let d = Matrix::diagonal(&[
        one.clone(),
        x2 - x1,
        (x3 - x2) * (x3 - x1),
        (x4 - x3) * (x4 - x2) * (x4 - x1),
    ]);
    let u3 = m([
        [&one, &zero, &zero, &zero],
        [&zero, &one, &zero, &zero],
        [&zero, &zero, &one, x3],
        [&zero, &zero, &zero, &one],
    ]);
    let x2sq = x2 * x2;
    let u2 = m([
        [&one, &zero, &zero, &zero],
        [&zero, &one, x2, &x2sq],
        [&zero, &zero, &one, x2],
        [&zero, &zero, &zero, &one],
    ]);
    let (x1sq, x1cu) = (x1 * x1, x1 * x1 * x1);
    let u1 = m([
        [&one, x1, &x1sq, &x1cu],
        [&zero, &one, x1, &x1sq],
        [&zero, &zero, &one, x1],
        [&zero, &zero, &zero, &one],
    ]);
    let product = [l2, l3, d, u3, u2, u1].iter().fold(l1, |acc, f| &acc * f);

    let v = vandermonde_matrix(&x).map_err(|e| e.to_string())?;
    let p = &v * &v.transpose();
    ensure(is_totally_positive(&v).map_err(|e| e.to_string())?.holds(), || {
        "V is not TP".into()
    })?;
    ensure(is_totally_positive(&p).map_err(|e| e.to_string())?.holds(), || {
        "VV^T is not TP".into()
    })?;
    let note = if product == v.transpose() {
        " (it equals the transpose of V)"
    } else {
        ""
    };
    ensure(product == v, || format!("L1L2L3 D U3U2U1 != V{note}:\n{product}"))
}

fn c7_basis_identities() -> Check {
    let a = SymAlgebra::default();
    let q = |n: i64, d: i64| ratio(n, d);
    let full: [&[usize]; 5] = [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
    let with =
        |basis: Basis, cs: [Rat; 5]| sym_rat(basis, &full.iter().zip(cs).map(|(p, c)| (*p, c)).collect::<Vec<_>>());
    let cases = [
        (
            Basis::E,
            Basis::H,
            with(Basis::H, [rat(-1), rat(2), rat(1), rat(-3), rat(1)]),
        ),
        (
            Basis::E,
            Basis::P,
            with(Basis::P, [q(-1, 4), q(1, 3), q(1, 8), q(-1, 4), q(1, 24)]),
        ),
        (
            Basis::H,
            Basis::E,
            with(Basis::E, [rat(-1), rat(2), rat(1), rat(-3), rat(1)]),
        ),
        (
            Basis::H,
            Basis::P,
            with(Basis::P, [q(1, 4), q(1, 3), q(1, 8), q(1, 4), q(1, 24)]),
        ),
        (
            Basis::P,
            Basis::E,
            with(Basis::E, [rat(-4), rat(4), rat(2), rat(-4), rat(1)]),
        ),
        (
            Basis::P,
            Basis::H,
            with(Basis::H, [rat(4), rat(-4), rat(-2), rat(4), rat(-1)]),
        ),
    ];
    for (from, to, expected) in cases {
        let got = a.convert(&sym(from, &[(&[4], 1)]), to).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("{from}4 in {to}: {}", one_line(&got)))?;
    }
    Ok(())
}

fn c8_schur_goldens() -> Check {
    let a = SymAlgebra::default();
    let cases = [
        (Basis::E, sym(Basis::S, &[(&[1, 1, 1, 1], 1)])),
        (Basis::H, sym(Basis::S, &[(&[4], 1)])),
        (
            Basis::P,
            sym(Basis::S, &[(&[4], 1), (&[3, 1], -1), (&[2, 2], 1), (&[2, 1, 1], -1)]),
        ),
    ];
    for (from, expected) in cases {
        let got = a
            .convert(&sym(from, &[(&[4], 1)]), Basis::S)
            .map_err(|e| e.to_string())?;
        ensure(got == expected, || {
            format!("{from}4 = {}, expected {}", one_line(&got), one_line(&expected))
        })?;
    }
    Ok(())
}

fn c9_lr_golden() -> Check {
    let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
    let got = lr_multiply(&p(&[3, 1]), &p(&[2, 1]));
    let expected: Vec<(Partition, usize)> = [
        (&[5, 2][..], 1),
        (&[5, 1, 1], 1),
        (&[4, 3], 1),
        (&[4, 2, 1], 2),
        (&[4, 1, 1, 1], 1),
        (&[3, 3, 1], 1),
        (&[3, 2, 2], 1),
        (&[3, 2, 1, 1], 1),
    ]
    .iter()
    .map(|(parts, c)| (p(parts), *c))
    .collect();
    let got_list: Vec<(Partition, usize)> = got.into_iter().collect();
    let mut expected_sorted = expected;
    expected_sorted.sort();
    ensure(got_list == expected_sorted, || format!("{got_list:?}"))
}

fn c10_jdt_golden() -> Check {
    let cases = [
        (". . 1\n. 2\n3", "1\n2\n3"),
        (". . 1\n. 3\n2", "1 3\n2"),
        (". . 2\n. 1\n3", "1 2\n3"),
        (". . 2\n. 3\n1", "1 2\n3"),
        (". . 3\n. 1\n2", "1 3\n2"),
        (". . 3\n. 2\n1", "1 2 3"),
    ];
    let shape = SkewShape::parse("3,2,1/2,1").map_err(|e| e.to_string())?;
    let all: BTreeSet<Tableau> = standard_tableaux(&shape)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let listed: BTreeSet<Tableau> = cases.iter().map(|(t, _)| Tableau::parse(t).unwrap()).collect();
    ensure(all == listed, || {
        "the six listed tableaux are not the standard tableaux of 321/21".into()
    })?;
    for (skew, image) in cases {
        let got = Tableau::parse(skew)
            .unwrap()
            .jeu_de_taquin()
            .map_err(|e| e.to_string())?;
        ensure(got == Tableau::parse(image).unwrap(), || {
            format!("jdt of {skew:?} gave\n{got}")
        })?;
    }
    let expansion = skew_schur_expand(&shape).map_err(|e| e.to_string())?;
    let expected = sym(Basis::S, &[(&[1, 1, 1], 1), (&[2, 1], 2), (&[3], 1)]);
    ensure(expansion == expected, || one_line(&expansion))
}

/// Skew shapes `λ/μ` with `1 <= |λ/μ| <= 6` and `|μ| <= 6`.
fn small_skew_shapes() -> Vec<SkewShape> {
    let mut out = Vec::new();
    for inner in 0..=6 {
        for mu in Partition::all(inner) {
            for size in inner + 1..=inner + 6 {
                for lambda in Partition::all(size).into_iter().filter(|l| l.contains(&mu)) {
                    out.push(SkewShape::new(lambda, mu.clone()).unwrap());
                }
            }
        }
    }
    out
}

fn c11_jdt_orders() -> Check {
    let mut tableaux = 0usize;
    for shape in small_skew_shapes() {
        for t in standard_tableaux(&shape).map_err(|e| e.to_string())? {
            let results = t.jeu_de_taquin_all_orders().map_err(|e| e.to_string())?;
            ensure(results.len() == 1, || format!("{} results for\n{t}", results.len()))?;
            tableaux += 1;
        }
    }
    ensure(tableaux > 0, || "no tableaux".into())
}

fn c12_lr_vs_skew() -> Check {
    for size in 0..=8 {
        for nu in Partition::all(size) {
            for inner in 0..=size {
                for mu in Partition::all(inner).into_iter().filter(|mu| nu.contains(mu)) {
                    let skew = skew_schur_expand(&SkewShape::new(nu.clone(), mu.clone()).unwrap())
                        .map_err(|e| e.to_string())?;
                    for lambda in Partition::all(size - inner) {
                        let product = lr_multiply(&lambda, &mu).get(&nu).copied().unwrap_or(0);
                        let from_skew = skew.coeff(&lambda);
                        ensure(from_skew == rat(product as i64), || {
                            format!("c^{nu}_{{{lambda},{mu}}}: product {product}, skew {from_skew}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn c13_positive_differences() -> Check {
    let a = SymAlgebra::default();
    let expected_diffs = [
        sym(Basis::S, &[(&[6], 1), (&[5, 1], 2), (&[4, 2], 1), (&[4, 1, 1], 1)]),
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
                (&[5, 2, 2], 1),
            ],
        ),
        sym(
            Basis::S,
            &[
                (&[10, 2], 1),
                (&[9, 3], 2),
                (&[9, 2, 1], 1),
                (&[8, 4], 1),
                (&[8, 3, 1], 1),
                (&[8, 2, 2], 1),
                (&[7, 5], 1),
                (&[7, 4, 1], 1),
                (&[7, 3, 2], 2),
                (&[6, 6], 1),
                (&[6, 5, 1], 1),
                (&[6, 4, 2], 1),
                (&[6, 3, 3], 1),
            ],
        ),
    ];
    let mut failures = Vec::new();
    for (i, expected) in (1..=3).zip(expected_diffs) {
        let d = a.schur_positive_difference(i).map_err(|e| e.to_string())?;
        let verdict = a.is_schur_positive(&d).map_err(|e| e.to_string())?;
        if !verdict.positive {
            failures.push(format!("i={i}: not Schur-positive"));
        }
        if d != expected {
            let diff = a.sub(&d, &expected).map_err(|e| e.to_string())?;
            failures.push(format!("i={i}: computed minus expected = {}", one_line(&diff)));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn c14_poset() -> Check {
    let p = poset(3).map_err(|e| e.to_string())?;
    let labels: Vec<String> = p.nodes.iter().map(|n| n.label()).collect();
    ensure(
        labels == ["Δ{1,2,3}Δ∅", "Δ{1}Δ{2,3}", "Δ{1,2}Δ{3}", "Δ{1,3}Δ{2}"],
        || format!("{labels:?}"),
    )?;
    ensure(p.relations.len() == 5, || format!("{:?}", p.relations))?;
    let index = |label: &str| labels.iter().position(|l| l == label).unwrap();
    ensure(
        p.relations.contains(&(index("Δ{1}Δ{2,3}"), index("Δ{1,3}Δ{2}"))),
        || "Δ1Δ23 <= Δ13Δ2 missing".into(),
    )?;
    for n in 1..=6 {
        let lattice = poset_with(n, Method::Lattice, 8).map_err(|e| e.to_string())?;
        let tl = poset(n).map_err(|e| e.to_string())?;
        ensure(lattice == tl, || format!("n={n}: criteria disagree"))?;
    }
    let mut rng = StdRng::seed_from_u64(14);
    for n in 1..=4 {
        let p = poset(n).map_err(|e| e.to_string())?;
        for sample in 0..500 {
            let m = random_tnn_matrix(&mut rng, n);
            let value = |c: &Coloring| c.product_on(&m).map_err(|e| e.to_string());
            for &(lo, hi) in &p.relations {
                let (a, b) = (
                    value(p.nodes[lo].representative())?,
                    value(p.nodes[hi].representative())?,
                );
                ensure(a <= b, || {
                    format!(
                        "n={n} sample {sample}: {} > {}",
                        p.nodes[lo].label(),
                        p.nodes[hi].label()
                    )
                })?;
            }
            for node in &p.nodes {
                let first = value(node.representative())?;
                for c in &node.members {
                    ensure(value(c)? == first, || {
                        format!("n={n} sample {sample}: {} not constant", node.label())
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn c15_real_roots() -> Check {
    let poly = |s: &str| Poly::parse(s).unwrap();
    let cubic = poly("1,6,5,1");
    ensure(
        certify_real_distinct(&cubic).map_err(|e| e.to_string())?.is_certified(),
        || "1+6z+5z^2+z^3 not certified".into(),
    )?;
    let count = sturm_real_root_count(&cubic).map_err(|e| e.to_string())?;
    ensure(count == 3, || format!("Sturm count {count}"))?;
    match toeplitz_refute(&poly("1,1,1"), 4).map_err(|e| e.to_string())? {
        ToeplitzVerdict::Refuted(w) => ensure(
            w.rows == set("1,2,3") && w.cols == set("2,3,4") && w.value == rat(-1),
            || format!("witness {} {} {}", w.rows, w.cols, w.value),
        )?,
        other => return Err(format!("1+z+z^2: {other:?}")),
    }
    let square = certify_real_distinct(&poly("1,2,1")).map_err(|e| e.to_string())?;
    ensure(!square.is_certified(), || "(1+z)^2 certified".into())
}

fn c16_char_poly_roots() -> Check {
    let mut rng = StdRng::seed_from_u64(16);
    for sample in 0..200 {
        let n = rng.gen_range(1..=4);
        let m = random_tnn_matrix(&mut rng, n);
        let chi = char_poly(&m).map_err(|e| e.to_string())?;
        let real = real_root_count_with_multiplicity(&chi).map_err(|e| e.to_string())?;
        ensure(real == n, || {
            format!("sample {sample}: {real} real roots of degree {n}\n{m}")
        })?;
    }
    Ok(())
}

fn run(id: usize, name: &str, limit: Option<Duration>, check: fn() -> Check) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(check))
        .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(()), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
        (other, _) => other,
    };
    match &outcome {
        Ok(()) => println!("PASS {id:>2} {name} ({elapsed:.2?})"),
        Err(why) => println!("FAIL {id:>2} {name} ({elapsed:.2?}): {why}"),
    }
    outcome.is_ok()
}

#[test]
fn acceptance_criteria() {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria: [Criterion; 16] = [
        ("minor of the 4x4 sample", secs(1), c1_minor),
        ("4x4 sample is TNN", secs(1), c2_tnn),
        ("A^2 = B by concatenation", secs(1), c3_concatenation),
        ("Lindström on random networks", secs(60), c4_lindstrom),
        ("Neville factorization round trip", secs(60), c5_neville),
        ("Vandermonde factorization", secs(5), c6_vandermonde),
        ("e4, h4, p4 basis identities", secs(5), c7_basis_identities),
        ("e4, h4, p4 in the Schur basis", None, c8_schur_goldens),
        ("s31 s21 by Littlewood-Richardson", secs(1), c9_lr_golden),
        ("jeu de taquin on 321/21", None, c10_jdt_golden),
        ("jeu de taquin order independence", secs(120), c11_jdt_orders),
        ("LR coefficients from skew Schur functions", secs(120), c12_lr_vs_skew),
        ("Schur-positive differences", None, c13_positive_differences),
        ("minor-product poset", secs(120), c14_poset),
        ("real-root certificates", None, c15_real_roots),
        (
            "characteristic polynomials are real-rooted",
            secs(60),
            c16_char_poly_roots,
        ),
    ];
    let failed: Vec<usize> = criteria
        .into_iter()
        .enumerate()
        .filter_map(|(i, (name, limit, check))| (!run(i + 1, name, limit, check)).then_some(i + 1))
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
