use std::collections::BTreeSet;

use ambicolor::coloring::{count_colorings, is_colorable};
use ambicolor::extremal::{ambiguous_max_edges, brute_force_max_edges, enumerate_extremal};
use ambicolor::graph::{are_isomorphic, build_graph, canonical_form, graphs_up_to_iso};
use ambicolor::matrix::{classify, enumerate_desirable, Family, SpecialVariant};
use ambicolor::maximality::{is_maximal_ambiguous, reconstruct_matrix, verify_theorem1};
use ambicolor::{ColorMatrix, Limits, Verdict};

const CAP: usize = 5_000_000;

fn special_with_tag(k: usize, n: usize, tag: SpecialVariant) -> Vec<ColorMatrix> {
    enumerate_desirable(k, n, &[Family::VerySpecial], CAP)
        .unwrap()
        .into_iter()
        .filter(|a| classify(a).special_tags.contains(&tag))
        .collect()
}

#[test]
fn c_special_existence_follows_residue_mod_k() {
    for k in 2..=4 {
        for n in 0..=12 {
            let found = special_with_tag(k, n, SpecialVariant::C);
            let predicted = n >= 2 * k && k >= 3 && !(n % k == k - 1 || n % k == k - 2);
            assert_eq!(!found.is_empty(), predicted, "k = {k}, n = {n}");
            for a in &found {
                let edges = build_graph(a).unwrap().edge_count();
                assert_eq!(edges, ambiguous_max_edges(n, k).unwrap(), "{:?}", a.rows());
            }
        }
    }
}

#[test]
fn very_special_graphs_are_extremal() {
    for k in 2..=4 {
        for n in k + 1..=12 {
            let target = ambiguous_max_edges(n, k).unwrap();
            for a in enumerate_desirable(k, n, &[Family::VerySpecial], CAP).unwrap() {
                assert_eq!(build_graph(&a).unwrap().edge_count(), target, "{:?}", a.rows());
            }
        }
    }
}

#[test]
fn transpose_swaps_a_and_b_and_keeps_the_graph() {
    for k in 2..=4 {
        for n in k + 1..=9 {
            for a in special_with_tag(k, n, SpecialVariant::A) {
                let t = a.transpose();
                assert!(classify(&t).special_tags.contains(&SpecialVariant::B));
                assert!(are_isomorphic(&build_graph(&a).unwrap(), &build_graph(&t).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn special_variant_examples() {
    let a = ColorMatrix::from_rows(&[vec![2, 0, 0], vec![0, 2, 0], vec![1, 0, 1]]).unwrap();
    assert_eq!(classify(&a).special_variant, SpecialVariant::A);
    assert_eq!(classify(&a.transpose()).special_variant, SpecialVariant::B);
    assert_eq!(build_graph(&a).unwrap().edge_count(), ambiguous_max_edges(6, 3).unwrap());
    let small = ColorMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(build_graph(&small).unwrap().edge_count(), ambiguous_max_edges(3, 2).unwrap());
}

/// Observed number of distinct graphs induced by (a)-special matrices, for
/// n = k + 1..=12. Two show up exactly when n >= 2k and 1 <= n mod k <= k - 2.
const A_SPECIAL_COUNTS: [(usize, [usize; 10]); 3] = [
    (2, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    (3, [1, 1, 1, 2, 1, 1, 2, 1, 1, 0]),
    (4, [1, 1, 1, 1, 2, 2, 1, 1, 0, 0]),
];

#[test]
fn a_special_graph_counts() {
    for (k, counts) in A_SPECIAL_COUNTS {
        for (n, &expected) in (k + 1..=12).zip(counts.iter()) {
            let certs: BTreeSet<_> = special_with_tag(k, n, SpecialVariant::A)
                .iter()
                .map(|a| canonical_form(&build_graph(a).unwrap()).unwrap())
                .collect();
            assert_eq!(certs.len(), expected, "k = {k}, n = {n}");
            let rule = n >= 2 * k && (1..=k.saturating_sub(2)).contains(&(n % k));
            assert_eq!(expected, if rule { 2 } else { 1 });
        }
    }
}

#[test]
fn every_desirable_graph_round_trips() {
    for k in 2..=4 {
        for n in 2..=9 {
            for a in enumerate_desirable(k, n, &Family::ALL, CAP).unwrap() {
                let g = build_graph(&a).unwrap().unlabeled();
                let (b, trace) = reconstruct_matrix(&g, k).unwrap();
                assert!(classify(&b).verdict.is_desirable());
                assert!(are_isomorphic(&g, &build_graph(&b).unwrap()).unwrap(), "{:?}", a.rows());
                assert_eq!(b.order(), g.n());
                assert!(trace.colorings.len() == 2 && trace.colorings[0] != trace.colorings[1]);
            }
        }
    }
}

#[test]
fn colorable_maximal_graphs_have_parts_of_size_at_most_two() {
    let limits = Limits::default();
    for n in 1..=7 {
        for cert in graphs_up_to_iso(n, &limits).unwrap() {
            let g = cert.to_graph();
            for k in 2..=4 {
                if !is_maximal_ambiguous(&g, k) || !is_colorable(&g, k - 1) {
                    continue;
                }
                for c in ambicolor::coloring::enumerate_colorings(&g, k - 1, usize::MAX) {
                    assert!(c.class_masks().iter().all(|m| m.count_ones() <= 2));
                }
                let (a, _) = reconstruct_matrix(&g, k).unwrap();
                assert!(matches!(classify(&a).verdict, Verdict::Tiny | Verdict::Small));
            }
        }
    }
}

#[test]
fn mininormal_graph_has_two_colorings() {
    let mini = ColorMatrix::from_rows(&[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 2]]).unwrap();
    assert!(classify(&mini).mininormal);
    assert_eq!(count_colorings(&build_graph(&mini).unwrap(), 3, 10), 2);
}

#[test]
fn extremal_graphs_are_maximal() {
    let limits = Limits::default();
    for k in 2..=4 {
        for n in 2..=10 {
            for e in enumerate_extremal(n, k, &limits).unwrap() {
                assert!(is_maximal_ambiguous(&e.cert.to_graph(), k), "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn unique_and_multiple_extremal_graphs_both_occur() {
    let limits = Limits::default();
    let counts: Vec<(usize, usize)> = (3..=12)
        .map(|n| (n, enumerate_extremal(n, 3, &limits).unwrap().len()))
        .collect();
    assert!(counts.iter().any(|&(_, c)| c == 1), "{counts:?}");
    assert!(counts.iter().any(|&(_, c)| c > 1), "{counts:?}");
}

#[test]
fn extremal_sets_match_oracle_on_eight_vertices() {
    let limits = Limits::with_n8();
    for k in 2..=5 {
        let (best, oracle) = brute_force_max_edges(8, k, &limits).unwrap();
        assert_eq!(best, Some(ambiguous_max_edges(8, k).unwrap()));
        let family: Vec<_> = enumerate_extremal(8, k, &limits).unwrap().into_iter().map(|e| e.cert).collect();
        assert_eq!(family, oracle, "k = {k}");
    }
}

#[test]
fn characterization_on_eight_vertices() {
    let report = verify_theorem1(8, &[2, 3, 4, 5], 4, &Limits::with_n8()).unwrap();
    assert_eq!(report.counterexample_count(), 0);
}
