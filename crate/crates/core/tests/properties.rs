mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rigidity_cr::connectivity::{separating_pairs, two_split, two_sum};
use rigidity_cr::crd::{crd_2splits, crd_3connected, crd_naive};
use rigidity_cr::fixtures;
use rigidity_cr::graph::{canonical_form, vid, LabeledGraph};
use rigidity_cr::sparsity::{fundamental_circuit, is_circuit, is_laman, is_sparse23};

#[test]
fn sparsity_matches_subset_enumeration_up_to_six_vertices() {
    for n in 2..=6 {
        for g in common::all_graphs(n) {
            assert_eq!(is_sparse23(&g).unwrap(), common::is_sparse(&g), "{g}");
            assert_eq!(is_laman(&g).unwrap(), common::is_laman(&g), "{g}");
            if n >= 4 {
                assert_eq!(is_circuit(&g).unwrap(), common::is_spanning_circuit(&g), "{g}");
            }
        }
    }
}

#[test]
fn fundamental_circuit_matches_subset_search() {
    let mut checked = 0;
    for n in 2..=6 {
        for g in common::all_graphs(n).filter(common::is_laman) {
            for e in g.non_edges() {
                let brute = common::circuits_through(&g, e);
                assert_eq!(brute.len(), 1, "{g} + {e}");
                assert_eq!(fundamental_circuit(&g, e).unwrap(), brute[0]);
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

fn arb_graph(n: u32) -> impl Strategy<Value = LabeledGraph> {
    let pairs = (n * (n - 1) / 2) as usize;
    prop::collection::vec(prop::bool::weighted(0.55), pairs).prop_map(move |keep| {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                if keep[k] {
                    edges.push(rigidity_cr::graph::e(a, b));
                }
                k += 1;
            }
        }
        LabeledGraph::new((1..=n).map(vid), edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sparsity_matches_on_seven_vertices(g in arb_graph(7)) {
        prop_assert_eq!(is_sparse23(&g).unwrap(), common::is_sparse(&g));
        prop_assert_eq!(is_laman(&g).unwrap(), common::is_laman(&g));
        prop_assert_eq!(is_circuit(&g).unwrap(), common::is_spanning_circuit(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_split_and_two_sum_are_inverse(seed in any::<u64>()) {
        let g = common::random_two_sum_circuit(seed, 10);
        prop_assert!(common::is_spanning_circuit(&g));
        for p in separating_pairs(&g).unwrap().iter().filter(|p| !p.adjacent) {
            for side in p.bipartitions() {
                let (g1, g2, e) = two_split(&g, p, &side).unwrap();
                prop_assert!(is_circuit(&g1).unwrap() && is_circuit(&g2).unwrap());
                prop_assert_eq!(two_sum(&g1, &g2, e).unwrap(), g.clone());
            }
        }
    }

    #[test]
    fn every_decomposition_reconstructs_its_parent(seed in any::<u64>()) {
        let g = common::random_two_sum_circuit(seed, 8);
        let splits = if separating_pairs(&g).unwrap().is_empty() { Vec::new() } else { crd_2splits(&g).unwrap() };
        for crd in crd_naive(&g).unwrap().into_iter().chain(splits) {
            prop_assert_eq!(crd.resultant_graph().unwrap(), g.clone());
            prop_assert!(crd.validate(&g).is_ok());
        }
    }
}

#[test]
fn three_connected_decompositions_reconstruct() {
    for g in [fixtures::w4(), fixtures::w5(), fixtures::desargues_plus_one()] {
        let crds = crd_3connected(&g).unwrap();
        assert!(!crds.is_empty());
        for c in crds {
            assert_eq!(c.resultant_graph().unwrap(), g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_ignores_labels(perm in Just((1..=10u32).collect::<Vec<_>>()).prop_shuffle(), offset in 0u32..50) {
        for (_, g) in fixtures::named_circuits() {
            let map: BTreeMap<_, _> = g.vertices().iter().map(|&v| (v, vid(perm[v.get() as usize - 1] + offset))).collect();
            let h = g.relabel(&map);
            prop_assert_eq!(canonical_form(&g).bytes, canonical_form(&h).bytes);
        }
    }
}
