use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use tnnkit::exact::{is_totally_nonnegative, minor, IndexSet};
use tnnkit::ineq::{compare, poset, tl_basis, tl_subset, two_colored_family_weight, Coloring, Method, Relation};
use tnnkit::network::concatenate;
use tnnkit::random::{random_grid_network, random_invertible_tnn_network};

fn coloring(n: usize) -> impl Strategy<Value = Coloring> {
    (0u64..1 << n).prop_map(move |mask| Coloring::all(n)[mask as usize].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn criteria_agree(n in 1usize..=6, seed in any::<u64>()) {
        let all = Coloring::all(n);
        let i = (seed as usize) % all.len();
        let j = (seed as usize / all.len()) % all.len();
        let (a, b) = (&all[i], &all[j]);
        let tl = compare(a, b, Method::TemperleyLieb).unwrap();
        prop_assert_eq!(tl, compare(a, b, Method::Lattice).unwrap());
        let flipped = match tl {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            other => other,
        };
        prop_assert_eq!(compare(b, a, Method::TemperleyLieb).unwrap(), flipped);
        prop_assert_eq!(compare(&a.complement(), b, Method::TemperleyLieb).unwrap(), tl);
    }

    /// The fully mixed coloring allows every diagram; one color allows only
    /// the identity.
    #[test]
    fn subsets_lie_between_identity_and_everything(c in coloring(5)) {
        let subset = tl_subset(&c);
        prop_assert!(!subset.is_empty());
        prop_assert!(subset.len() <= tl_basis(5).len());
        prop_assert!(tl_subset(&Coloring::of(5, &[1, 2, 3, 4, 5])).iter().all(|d| subset.contains(d)));
    }

    /// Lindström: the product of two complementary principal minors is the
    /// weight of the two-colored families.
    #[test]
    fn two_colored_families(seed in any::<u64>(), n in 1usize..=3, c in 0u64..8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_grid_network(&mut rng, n, 3, 10);
        let c = &Coloring::all(n)[(c % (1 << n)) as usize];
        let w = g.weight_matrix().unwrap();
        prop_assert_eq!(two_colored_family_weight(&g, c).unwrap(), c.product_on(&w).unwrap());
    }

    #[test]
    fn concatenation_multiplies_weight_matrices(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_invertible_tnn_network(&mut rng, n);
        let b = random_grid_network(&mut rng, n, 2, 6);
        let g = concatenate(&a, &b).unwrap();
        prop_assert_eq!(g.validate(), Ok(()));
        let w = g.weight_matrix().unwrap();
        prop_assert_eq!(&w, &(&a.weight_matrix().unwrap() * &b.weight_matrix().unwrap()));
        prop_assert!(is_totally_nonnegative(&w).unwrap().holds());
        for k in 1..=n {
            for rows in IndexSet::subsets(n, k) {
                for cols in IndexSet::subsets(n, k) {
                    prop_assert_eq!(minor(&w, &rows, &cols).unwrap(), g.disjoint_family_weight(&rows, &cols).unwrap());
                }
            }
        }
    }
}

#[test]
fn posets_are_ordered_and_transitive() {
    for n in 1..=6 {
        let p = poset(n).unwrap();
        assert_eq!(
            p.nodes.iter().map(|node| node.members.len()).sum::<usize>(),
            1 << (n - 1)
        );
        for &(a, b) in &p.relations {
            assert!(a < b, "n = {n}: relation ({a}, {b}) goes backwards");
        }
        for &(a, c) in &p.relations {
            for &(b, d) in &p.relations {
                if c == b {
                    assert!(p.relations.contains(&(a, d)), "n = {n}: not transitive");
                }
            }
        }
    }
}
