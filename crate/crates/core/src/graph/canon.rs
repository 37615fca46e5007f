//! Canonical labeling by equitable partition refinement and individualization.
//!
//! The search tree is built only from isomorphism-invariant choices, so the
//! lexicographically smallest relabeled adjacency over all leaves is a
//! complete invariant. Branches that differ by swapping two twins
//! (`N(u) - v == N(v) - u`) lead to identical leaf sets and are skipped.

use serde::{Serialize, Serializer};

use super::{bit, bits, SimpleGraph};
use crate::error::{check_limit, Result};
use crate::Limits;

/// Canonical adjacency rows; two graphs have equal certificates iff they are
/// isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalCert {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_rows(self.rows.clone())
    }

    /// graph6 encoding of the canonical representative.
    pub fn graph6(&self) -> String {
        super::io::to_graph6(&self.to_graph())
    }
}

impl Serialize for CanonicalCert {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.graph6())
    }
}

/// Canonical certificate with the default size guard.
pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalCert> {
    canonical_form_with(g, &Limits::default())
}

pub fn canonical_form_with(g: &SimpleGraph, limits: &Limits) -> Result<CanonicalCert> {
    let lab = canonical_order(g, limits)?;
    Ok(CanonicalCert {
        n: g.n(),
        rows: relabeled_rows(g, &lab),
    })
}

/// Permutation `perm` with `g.permuted(&perm)` equal to the canonical
/// representative.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<Vec<usize>> {
    let lab = canonical_order(g, &Limits::default())?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Rows of the graph after placing vertex `lab[p]` at position `p`.
fn relabeled_rows(g: &SimpleGraph, lab: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; lab.len()];
    for (p, &v) in lab.iter().enumerate() {
        pos[v] = p;
    }
    lab.iter()
        .map(|&v| bits(g.neighbors(v)).fold(0u64, |acc, w| acc | bit(pos[w])))
        .collect()
}

fn canonical_order(g: &SimpleGraph, limits: &Limits) -> Result<Vec<usize>> {
    let n = g.n();
    check_limit("canonical labeling vertex count", n, limits.canon_max_n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let twins = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u != v && g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u))
                .fold(0u64, |acc, u| acc | bit(u))
        })
        .collect();
    let mut search = Search {
        g,
        twins,
        best: None,
    };
    search.descend(vec![super::full_mask(n)]);
    Ok(search.best.expect("search visits at least one leaf").1)
}

struct Search<'a> {
    g: &'a SimpleGraph,
    twins: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>) {
        let cells = refine(self.g, cells);
        match cells.iter().position(|c| c.count_ones() > 1) {
            None => {
                let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
                let rows = relabeled_rows(self.g, &lab);
                if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
                    self.best = Some((rows, lab));
                }
            }
            Some(idx) => {
                let cell = cells[idx];
                let mut tried = 0u64;
                for v in bits(cell) {
                    if self.twins[v] & tried != 0 {
                        continue;
                    }
                    tried |= bit(v);
                    let mut next = Vec::with_capacity(cells.len() + 1);
                    next.extend_from_slice(&cells[..idx]);
                    next.push(bit(v));
                    next.push(cell & !bit(v));
                    next.extend_from_slice(&cells[idx + 1..]);
                    self.descend(next);
                }
            }
        }
    }
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable. New cells are ordered by their count signature.
fn refine(g: &SimpleGraph, mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let mut next: Vec<u64> = Vec::with_capacity(g.n());
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u32>, u64)> = Vec::new();
            for v in bits(cell) {
                let sig: Vec<u32> = cells
                    .iter()
                    .map(|&c| (g.neighbors(v) & c).count_ones())
                    .collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, m)) => *m |= bit(v),
                    None => groups.push((sig, bit(v))),
                }
            }
            groups.sort_by(|a, b| a.0.cmp(&b.0));
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    #[test]
    fn four_cycle_is_k22() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        assert!(are_isomorphic(&c4, &k22).unwrap());
    }

    #[test]
    fn path_is_not_triangle() {
        let p3 = SimpleGraph::path(3).unwrap();
        let k3 = SimpleGraph::complete(3).unwrap();
        assert!(!are_isomorphic(&p3, &k3).unwrap());
    }

    #[test]
    fn canonical_labeling_maps_to_certificate() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let perm = canonical_labeling(&g).unwrap();
        assert_eq!(g.permuted(&perm), canonical_form(&g).unwrap().to_graph());
    }

    #[test]
    fn regular_nonisomorphic_pair() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices.
        let c6 = SimpleGraph::cycle(6).unwrap();
        let tt = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
        // Prism versus K_{3,3}: both 3-regular on 6 vertices.
        let prism = SimpleGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert!(!are_isomorphic(&prism, &k33).unwrap());
    }

    #[test]
    fn large_symmetric_graphs_are_fast() {
        // Twin pruning keeps these trivial despite huge automorphism groups.
        let e = SimpleGraph::empty(16).unwrap();
        assert_eq!(canonical_form(&e).unwrap().to_graph(), e);
        let g = complete_multipartite(&[4, 4, 4, 4]).unwrap();
        assert_eq!(canonical_form(&g).unwrap().edge_count(), 96);
    }

    #[test]
    fn size_guard() {
        let g = SimpleGraph::empty(17).unwrap();
        assert!(canonical_form(&g).is_err());
        let limits = Limits {
            canon_max_n: 20,
            ..Limits::default()
        };
        assert!(canonical_form_with(&g, &limits).is_ok());
    }
}
