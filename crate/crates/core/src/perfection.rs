//! Perfectness checks for small graphs.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::is_colorable;
use crate::error::{check_limit, Error, Result};
use crate::graph::{build_graph, clique_number, full_mask, graphs_up_to_iso, SimpleGraph};
use crate::matrix::{enumerate_desirable, Family};
use crate::maximality::is_maximal_ambiguous;
use crate::{in_pool, Limits};

/// Every induced subgraph has chromatic number equal to its clique number.
///
/// Checked directly over all `2^n` vertex subsets.
pub fn is_perfect(g: &SimpleGraph) -> Result<bool> {
    is_perfect_with(g, &Limits::default())
}

pub fn is_perfect_with(g: &SimpleGraph, limits: &Limits) -> Result<bool> {
    check_limit("perfectness check order", g.n(), limits.perfect_max_n)?;
    Ok((0..=full_mask(g.n())).into_par_iter().all(|mask| {
        let h = g.induced(mask);
        // chi >= omega always, so omega colors suffice iff they are equal.
        is_colorable(&h, clique_number(&h))
    }))
}

/// Neither `g` nor its complement has an induced odd cycle of length at
/// least 5.
pub fn is_perfect_by_holes(g: &SimpleGraph) -> Result<bool> {
    is_perfect_by_holes_with(g, &Limits::default())
}

pub fn is_perfect_by_holes_with(g: &SimpleGraph, limits: &Limits) -> Result<bool> {
    check_limit("perfectness check order", g.n(), limits.perfect_max_n)?;
    Ok(odd_hole(g).is_none() && odd_hole(&g.complement()).is_none())
}

/// Vertex set of some induced odd cycle of length at least 5.
pub fn odd_hole(g: &SimpleGraph) -> Option<u64> {
    (0..=full_mask(g.n())).find(|&mask| {
        let len = mask.count_ones();
        len >= 5 && len % 2 == 1 && is_induced_cycle(g, mask)
    })
}

/// The subgraph induced by `mask` is a single cycle.
fn is_induced_cycle(g: &SimpleGraph, mask: u64) -> bool {
    if crate::graph::bits(mask).any(|v| (g.neighbors(v) & mask).count_ones() != 2) {
        return false;
    }
    // 2-regular; connected iff a walk from any vertex reaches all of it.
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = g.neighbors(v) & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectnessReport {
    pub graphs_checked: usize,
    /// Edge lists of graphs that failed the definition-based check.
    pub violations: Vec<Vec<(usize, usize)>>,
    /// Edge lists on which the two methods disagree.
    pub method_disagreements: Vec<Vec<(usize, usize)>>,
}

/// Checks every maximal ambiguously k-colorable graph on at most
/// `min(max_n, exhaustive bound)` vertices and every `G(A)` for desirable
/// `k × k` matrices with entry sum at most `max_n`.
pub fn verify_perfectness(max_n: usize, k_list: &[usize], jobs: usize, limits: &Limits) -> Result<PerfectnessReport> {
    check_limit("perfectness check order", max_n, limits.perfect_max_n)?;
    if k_list.contains(&0) {
        return Err(Error::Precondition("k must be positive".into()));
    }
    in_pool(jobs, || {
        let mut corpus: Vec<SimpleGraph> = Vec::new();
        for n in 1..=max_n.min(limits.exhaustive_max_n) {
            let certs = graphs_up_to_iso(n, limits)?;
            for &k in k_list {
                corpus.par_extend(
                    certs
                        .par_iter()
                        .map(|c| c.to_graph())
                        .filter(|g| is_maximal_ambiguous(g, k)),
                );
            }
        }
        for &k in k_list {
            for n in 1..=max_n {
                for a in enumerate_desirable(k, n, &Family::ALL, limits.enumeration_cap)? {
                    corpus.push(build_graph(&a)?.unlabeled());
                }
            }
        }
        let results: Vec<(bool, bool)> = corpus
            .par_iter()
            .map(|g| Ok((is_perfect_with(g, limits)?, is_perfect_by_holes_with(g, limits)?)))
            .collect::<Result<_>>()?;
        let mut report = PerfectnessReport {
            graphs_checked: corpus.len(),
            violations: Vec::new(),
            method_disagreements: Vec::new(),
        };
        for (g, (by_def, by_holes)) in corpus.iter().zip(results) {
            if !by_def {
                report.violations.push(g.edges());
            }
            if by_def != by_holes {
                report.method_disagreements.push(g.edges());
            }
        }
        Ok(report)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;
    use crate::matrix::ColorMatrix;

    #[test]
    fn examples() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        assert!(!is_perfect(&c5).unwrap());
        assert!(!is_perfect_by_holes(&c5).unwrap());
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(is_perfect(&k222).unwrap());
        let normal3 = ColorMatrix::from_rows(&[vec![1, 2, 0], vec![1, 3, 1], vec![1, 1, 1]]).unwrap();
        assert!(is_perfect(&build_graph(&normal3).unwrap()).unwrap());
    }

    #[test]
    fn antihole_detected() {
        let co_c7 = SimpleGraph::cycle(7).unwrap().complement();
        assert!(!is_perfect(&co_c7).unwrap());
        assert!(!is_perfect_by_holes(&co_c7).unwrap());
        assert!(odd_hole(&co_c7).is_none());
        let c6 = SimpleGraph::cycle(6).unwrap();
        assert!(is_perfect(&c6).unwrap());
        assert!(is_perfect_by_holes(&c6).unwrap());
    }

    #[test]
    fn methods_agree_on_small_graphs() {
        for n in 1..=6 {
            for cert in graphs_up_to_iso(n, &Limits::default()).unwrap() {
                let g = cert.to_graph();
                assert_eq!(is_perfect(&g).unwrap(), is_perfect_by_holes(&g).unwrap());
            }
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            is_perfect(&SimpleGraph::empty(15).unwrap()),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn small_report_is_clean() {
        let report = verify_perfectness(5, &[2, 3], 1, &Limits::default()).unwrap();
        assert!(report.graphs_checked > 0);
        assert!(report.violations.is_empty());
        assert!(report.method_disagreements.is_empty());
    }
}
