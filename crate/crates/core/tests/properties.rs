use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use copsi_core::canon::canonical_code;
use copsi_core::copsi::Engine;
use copsi_core::enumerate::{connected_graphs_of_size, connected_subsets, graphs_of_order};
use copsi_core::extremal::extremal_by_size;
use copsi_core::formula::{cycle_formula, path_formula, star_formula};
use copsi_core::graph::{make_cycle, make_path, make_star, Graph, VertexSet};
use copsi_core::graph6;
use copsi_core::subiso::{count_isomorphisms_u128, is_isomorphic};

fn pairs(order: usize) -> Vec<(usize, usize)> {
    (1..order)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect()
}

fn from_mask(order: usize, mask: u64) -> Graph {
    let p = pairs(order);
    Graph::from_edges(
        order,
        p.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e),
    )
    .unwrap()
}

fn labelled_graphs(order: usize) -> impl Iterator<Item = Graph> {
    let slots = order * order.saturating_sub(1) / 2;
    (0u64..1 << slots).map(move |m| from_mask(order, m))
}

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let p = pairs(n);
            Graph::from_edges(n, p.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e)).unwrap()
        })
    })
}

fn arb_graph_with_perm(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn isomorphism_count_is_symmetric(g in arb_graph(6), h in arb_graph(6)) {
        prop_assert_eq!(count_isomorphisms_u128(&g, &h), count_isomorphisms_u128(&h, &g));
    }

    #[test]
    fn automorphism_count_divides_factorial(g in arb_graph(7)) {
        let aut = count_isomorphisms_u128(&g, &g);
        prop_assert!(aut >= 1);
        prop_assert_eq!(factorial(g.order()) % aut, 0);
    }

    #[test]
    fn relabelling_invariance((g, perm) in arb_graph_with_perm(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        prop_assert_eq!(count_isomorphisms_u128(&g, &h), count_isomorphisms_u128(&g, &g));
        prop_assert!(perm.is_empty() || is_isomorphic(&g, &h));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(30)) {
        let text = graph6::encode(&g);
        let back = graph6::decode(&text).unwrap();
        prop_assert_eq!(graph6::encode(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn breakdown_law((g, _) in arb_graph_with_perm(7)) {
        let b = Engine::default().breakdown(&g).unwrap();
        let (m, n) = (g.order(), g.size());
        prop_assert_eq!(&b.singleton, &BigUint::from(m * m));
        prop_assert_eq!(&b.edge, &BigUint::from(2 * n * n));
        prop_assert_eq!(&b.singleton + &b.edge + &b.third, b.total);
    }

    #[test]
    fn engines_agree_on_arbitrary_hosts(g in arb_graph(7)) {
        let e = Engine::default();
        prop_assert_eq!(e.naive(&g).unwrap(), e.classes(&g).unwrap());
    }
}

#[test]
fn canonical_code_decides_isomorphism_up_to_order_five() {
    for m in 0..=5 {
        let graphs: Vec<Graph> = labelled_graphs(m).collect();
        let codes: Vec<_> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        // Compare each graph against one member of every class seen so far;
        // transitivity covers the remaining pairs.
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..graphs.len() {
            for &r in &reps {
                assert_eq!(
                    codes[i] == codes[r],
                    count_isomorphisms_u128(&graphs[i], &graphs[r]) > 0,
                    "order {m}: {:?} vs {:?}",
                    graphs[i],
                    graphs[r]
                );
            }
            if !reps.iter().any(|&r| codes[r] == codes[i]) {
                reps.push(i);
            }
        }
        assert_eq!(reps.len(), graphs_of_order(m).unwrap().len());
    }
}

#[test]
fn connected_subsets_match_power_set_filter() {
    for m in 0..=6 {
        for g in labelled_graphs(m) {
            let mut brute: Vec<VertexSet> = (1u64..1 << m)
                .map(VertexSet::from_bits)
                .filter(|&s| g.is_connected(Some(s)))
                .collect();
            brute.sort_by_key(|s| (s.len(), s.bits()));
            assert_eq!(connected_subsets(&g), brute, "{g:?}");
        }
    }
}

/// Pairwise-isomorphism clustering of the connected labelled graphs with
/// exactly `n` edges.
fn size_classes_by_clustering(n: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for m in 1..=n + 1 {
        for g in labelled_graphs(m).filter(|g| g.size() == n && g.is_connected(None)) {
            if !reps.iter().any(|r| is_isomorphic(r, &g)) {
                reps.push(g);
            }
        }
    }
    reps
}

#[test]
fn connected_graphs_of_size_is_exhaustive() {
    for n in 0..=5 {
        let got = connected_graphs_of_size(n).unwrap();
        let oracle = size_classes_by_clustering(n);
        assert_eq!(got.len(), oracle.len(), "size {n}");
        for g in &got {
            assert_eq!(g.size(), n);
            assert!(g.is_connected(None));
            assert_eq!(oracle.iter().filter(|r| is_isomorphic(r, g)).count(), 1);
        }
        for (i, a) in got.iter().enumerate() {
            for b in &got[i + 1..] {
                assert_eq!(count_isomorphisms_u128(a, b), 0);
            }
        }
    }
}

#[test]
fn spanning_members_are_trees() {
    for n in 0..=7 {
        for g in connected_graphs_of_size(n).unwrap() {
            if g.order() == n + 1 {
                assert!(g.is_acyclic(), "{g:?}");
            } else {
                assert!(g.order() <= n);
            }
        }
    }
}

#[test]
fn graphs_of_order_counts() {
    for m in 0..=4 {
        let mut reps: Vec<Graph> = Vec::new();
        for g in labelled_graphs(m) {
            if !reps.iter().any(|r| is_isomorphic(r, &g)) {
                reps.push(g);
            }
        }
        assert_eq!(graphs_of_order(m).unwrap().len(), reps.len());
    }
    assert_eq!(graphs_of_order(3).unwrap().len(), 4);
    assert_eq!(graphs_of_order(4).unwrap().len(), 11);
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                (
                    connected_graphs_of_size(6).unwrap(),
                    extremal_by_size(5).unwrap(),
                )
            })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn closed_forms_match_brute_force() {
    let e = Engine::default();
    for n in 0..=6 {
        assert_eq!(
            e.naive(&make_star(n).unwrap()).unwrap(),
            star_formula(n as u64)
        );
    }
    for m in 1..=9 {
        assert_eq!(
            e.naive(&make_path(m).unwrap()).unwrap(),
            path_formula(m as u64).unwrap()
        );
    }
    for m in 3..=8 {
        assert_eq!(
            e.naive(&make_cycle(m).unwrap()).unwrap(),
            cycle_formula(m as u64).unwrap()
        );
    }
}

#[test]
fn star_strictly_beats_every_other_candidate() {
    for n in 1..=6 {
        let r = extremal_by_size(n).unwrap();
        assert!(r.confirms_expected());
        let others: BTreeSet<_> = r
            .candidates
            .iter()
            .filter(|c| c.code != r.expected_code)
            .map(|c| c.copsi.clone())
            .collect();
        assert!(others.iter().all(|v| *v < r.maximum), "size {n}");
    }
}
