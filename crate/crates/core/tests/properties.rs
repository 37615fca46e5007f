use ambicolor::coloring::{chromatic_number, count_colorings};
use ambicolor::dfold::join;
use ambicolor::graph::io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use ambicolor::graph::{are_isomorphic, build_graph, canonical_form, labels_consistent};
use ambicolor::matrix::{classify, is_fully_indecomposable, SpecialVariant};
use ambicolor::{ColorMatrix, SimpleGraph, Verdict};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |keep| {
            let mut edges = Vec::new();
            let mut it = keep.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn matrix_strategy() -> impl Strategy<Value = ColorMatrix> {
    (1usize..=6).prop_flat_map(|k| {
        proptest::collection::vec(prop_oneof![3 => Just(0u32), 2 => 1u32..=3], k * k)
            .prop_map(move |cells| ColorMatrix::new(k, cells).unwrap())
    })
}

fn matrix_with_permutation() -> impl Strategy<Value = (ColorMatrix, Vec<usize>)> {
    matrix_strategy().prop_flat_map(|a| {
        let k = a.k();
        (Just(a), Just((0..k).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph_with_permutation(max_n: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_is_consistent(a in matrix_strategy()) {
        let class = classify(&a);
        prop_assert_eq!(&class, &classify(&a));
        let k = a.k();
        let diag_zeros = (0..k).filter(|&i| a.get(i, i) == 0).count();
        match class.verdict {
            Verdict::Tiny | Verdict::Small => {
                prop_assert!(a.is_diagonal());
                prop_assert!(diag_zeros >= 1);
            }
            Verdict::Special => {
                let support = a.off_diagonal_support();
                prop_assert_eq!(support.len(), 1);
                let (i, j) = support[0];
                prop_assert_eq!(a.get(i, j), 1);
                prop_assert_eq!(diag_zeros, 0);
            }
            Verdict::Normal => {
                let block = class.normal_block.clone().unwrap();
                let r = block.len();
                prop_assert!((2..=k).contains(&r));
                prop_assert_eq!(class.normal_block_size, Some(r));
                prop_assert!(is_fully_indecomposable(&a.principal_submatrix(&block).unwrap()));
            }
            Verdict::NotDesirable => prop_assert!(class.witness.is_some()),
        }
        if class.special_variant != SpecialVariant::NotApplicable {
            prop_assert_eq!(class.verdict, Verdict::Special);
        }
        if class.mininormal {
            prop_assert_eq!(class.verdict, Verdict::Normal);
            prop_assert_eq!(class.normal_block_size, Some(2));
        }
    }

    #[test]
    fn classification_ignores_simultaneous_permutation((a, perm) in matrix_with_permutation()) {
        let b = a.permuted(&perm);
        prop_assert_eq!(classify(&a).verdict, classify(&b).verdict);
        prop_assert_eq!(classify(&a).normal_block_size, classify(&b).normal_block_size);
    }

    #[test]
    fn built_graphs_match_their_matrix(a in matrix_strategy()) {
        prop_assume!(a.order() <= 40);
        let g = build_graph(&a).unwrap();
        prop_assert_eq!(g.n(), a.order());
        prop_assert!(g.is_well_formed());
        prop_assert!(labels_consistent(&g));
    }

    #[test]
    fn canonical_form_is_label_invariant((g, perm) in graph_with_permutation(9)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().to_graph().edge_count(), g.edge_count());
    }

    #[test]
    fn isomorphism_is_an_equivalence(g in graph_strategy(6), h in graph_strategy(6), f in graph_strategy(6)) {
        prop_assert!(are_isomorphic(&g, &g).unwrap());
        prop_assert_eq!(are_isomorphic(&g, &h).unwrap(), are_isomorphic(&h, &g).unwrap());
        if are_isomorphic(&g, &h).unwrap() && are_isomorphic(&h, &f).unwrap() {
            prop_assert!(are_isomorphic(&g, &f).unwrap());
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(12)) {
        let co = g.complement();
        prop_assert_eq!(co.complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + co.edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn coloring_count_is_monotone_in_k(g in graph_strategy(7)) {
        let counts: Vec<usize> = (1..=7).map(|k| count_colorings(&g, k, usize::MAX)).collect();
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(counts[6] >= 1);
    }

    #[test]
    fn join_adds_chromatic_numbers(g in graph_strategy(5), h in graph_strategy(5)) {
        let j = join(&g, &h).unwrap();
        prop_assert_eq!(chromatic_number(&j), chromatic_number(&g) + chromatic_number(&h));
    }

    #[test]
    fn file_formats_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn five_cycle_is_self_complementary() {
    let c5 = SimpleGraph::cycle(5).unwrap();
    assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    let k5 = SimpleGraph::complete(5).unwrap();
    assert_eq!(k5.complement(), SimpleGraph::empty(5).unwrap());
}

#[test]
fn small_cycle_and_bipartite_are_isomorphic() {
    let k22 = ambicolor::graph::complete_multipartite(&[2, 2]).unwrap();
    assert!(are_isomorphic(&k22, &SimpleGraph::cycle(4).unwrap()).unwrap());
    assert!(!are_isomorphic(&SimpleGraph::path(3).unwrap(), &SimpleGraph::complete(3).unwrap()).unwrap());
}
