//! Property tests for the structural invariants: cut identity is
//! unordered, the predicate agrees with exhaustive enumeration, minimal
//! and maximal filters bracket every solution, monochromatic blocks are
//! never split, and the counting family matches the oracle.

use std::collections::BTreeSet;

use proptest::prelude::*;

use dcut_core::gen::star_forest;
use dcut_core::graph::{edge_cut_of, load_graph, Bipartition, EdgeCut, Graph};
use dcut_core::oracle::{
    all_d_cut_bipartitions, count_maximal_family, enumerate_all_bruteforce, filter_maximal,
    filter_minimal, is_d_cut, monochromatic_partition,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph(9)) {
        let text = g.to_edge_list();
        prop_assert_eq!(load_graph(&text).unwrap(), g);
    }

    #[test]
    fn cut_identity_is_unordered(g in arb_graph(8), mask in any::<u64>()) {
        let n = g.n();
        prop_assume!(n >= 2);
        let side_a: BTreeSet<usize> = (0..n).filter(|v| (mask >> v) & 1 == 1).collect();
        prop_assume!(!side_a.is_empty() && side_a.len() < n);
        let side_b: BTreeSet<usize> = (0..n).filter(|v| !side_a.contains(v)).collect();
        let p1 = Bipartition::new(&g, side_a.clone(), side_b.clone()).unwrap();
        let p2 = Bipartition::new(&g, side_b, side_a).unwrap();
        prop_assert_eq!(edge_cut_of(&g, &p1), edge_cut_of(&g, &p2));
    }

    #[test]
    fn predicate_matches_enumeration(g in arb_graph(7), d in 1usize..=2, mask in any::<u64>()) {
        let sols = enumerate_all_bruteforce(&g, d, 20).unwrap();
        let edges = g.edges();
        let f = EdgeCut::from_pairs(
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> (i % 64)) & 1 == 1)
                .map(|(_, e)| *e),
        );
        prop_assert_eq!(is_d_cut(&g, d, &f).unwrap(), sols.contains(&f));
    }

    #[test]
    fn filters_bracket_every_cut(g in arb_graph(7), d in 1usize..=2) {
        let sols = enumerate_all_bruteforce(&g, d, 20).unwrap();
        let min = filter_minimal(&sols);
        let max = filter_maximal(&sols);
        prop_assert!(min.iter().all(|f| sols.contains(f)));
        prop_assert!(max.iter().all(|f| sols.contains(f)));
        for f in &sols {
            prop_assert!(min.iter().any(|m| m.is_subset_of(f)));
            prop_assert!(max.iter().any(|m| f.is_subset_of(m)));
        }
    }

    #[test]
    fn mono_blocks_never_split(g in arb_graph(8), d in 1usize..=2) {
        let part = monochromatic_partition(&g, d, &[]);
        for (side_a, _) in all_d_cut_bipartitions(&g, d, 8).unwrap() {
            for block in part.blocks() {
                let ina = block.iter().filter(|v| side_a.contains(v)).count();
                prop_assert!(ina == 0 || ina == block.len());
            }
        }
    }

    #[test]
    fn lifted_union_matches_oracle_on_random_graphs(
        g in arb_graph(7),
        d in 1usize..=2,
    ) {
        use dcut_core::pipeline::{verify_instance, Options, Param, Variant};
        let opts = Options::default();
        for param in [Param::Vc, Param::Nd, Param::Pc] {
            for variant in [Variant::All, Variant::Min, Variant::Max] {
                let r = verify_instance("prop", &g, d, param, variant, &opts, None).unwrap();
                prop_assert!(r.passed(), "{:?} {:?}: {:?}", param, variant, r.verdict);
            }
        }
    }
}

#[test]
fn counting_family_matches_oracle_at_desk_scale() {
    // k(m+1) <= 12 keeps the instance inside the oracle limit.
    for (k, m, d) in [(3, 1, 1), (3, 2, 1), (3, 3, 1), (5, 1, 1)] {
        let g = star_forest(k, m);
        let maximal = filter_maximal(&enumerate_all_bruteforce(&g, d, 20).unwrap());
        assert_eq!(
            maximal.len() as u128,
            count_maximal_family(k, m, d).unwrap(),
            "star-forest({k},{m}) d={d}"
        );
    }
}
