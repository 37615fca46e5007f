//! Simple graphs on at most 64 vertices stored as adjacency bit rows.

mod canon;
mod clique;
mod generate;
pub mod io;

pub use canon::{are_isomorphic, canonical_form, canonical_form_with, canonical_labeling, CanonicalCert};
pub use clique::{clique_number, maximum_clique};
pub use generate::{graphs_up_to_iso, labeled_graphs};

use crate::error::{check_limit, Error, Result};
use crate::matrix::ColorMatrix;
use crate::Limits;

/// Hard capacity of the bit-row representation.
pub const MAX_VERTICES: usize = 64;

/// Coordinates of a vertex of `G(A)`: the index tuple of the matrix (or
/// tensor) entry it belongs to, and which copy within that entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct VertexLabel {
    pub coords: Vec<usize>,
    pub copy: usize,
}

/// Finite undirected simple graph.
///
/// Equality compares the vertex count and the adjacency only; labels are
/// carried along as metadata.
#[derive(Debug, Clone, Default)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<u64>,
    labels: Option<Vec<VertexLabel>>,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for SimpleGraph {}

impl std::hash::Hash for SimpleGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_limit("vertex count", n, MAX_VERTICES)?;
        Ok(SimpleGraph {
            n,
            rows: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw bit rows, symmetrizing nothing: the rows
    /// must already describe a loopless symmetric relation.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        let g = SimpleGraph {
            n: rows.len(),
            rows,
            labels: None,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.rows[v] = full_mask(n) & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u}, {v})");
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Pairs of distinct nonadjacent vertices `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let all = full_mask(self.n);
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(!self.rows[u] & all & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Unlabeled copy.
    pub fn unlabeled(&self) -> Self {
        SimpleGraph {
            n: self.n,
            rows: self.rows.clone(),
            labels: None,
        }
    }

    pub fn complement(&self) -> Self {
        let all = full_mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        SimpleGraph {
            n: self.n,
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by the vertex set `mask`, vertices renumbered in
    /// increasing order.
    pub fn induced(&self, mask: u64) -> Self {
        let verts: Vec<usize> = bits(mask & full_mask(self.n)).collect();
        let mut rows = vec![0u64; verts.len()];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[a] |= bit(b);
                }
            }
        }
        SimpleGraph::from_rows(rows)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.rows[u]) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = ls.clone();
            for (v, l) in ls.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            out
        });
        SimpleGraph {
            n: self.n,
            rows,
            labels,
        }
    }

    /// True when `mask` is a set of pairwise nonadjacent vertices.
    pub fn is_anticlique(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.rows[v] & mask == 0)
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| bits(self.rows[u] & !full_mask(u + 1)).all(|v| self.rows[u] & self.rows[v] == 0))
    }

    /// Symmetric, loopless, no bits beyond `n`.
    pub fn is_well_formed(&self) -> bool {
        let all = full_mask(self.n);
        self.rows.len() == self.n
            && (0..self.n).all(|u| {
                self.rows[u] & !all == 0
                    && !self.has_edge(u, u)
                    && bits(self.rows[u]).all(|v| self.has_edge(v, u))
            })
    }
}

/// `G(A)`: vertices `(i, j, t)` for `t < A(i, j)` in row-major order, with
/// `(i, j, t) ~ (i', j', t')` iff `i != i'` and `j != j'`.
pub fn build_graph(a: &ColorMatrix) -> Result<SimpleGraph> {
    build_graph_with(a, &Limits::default())
}

pub fn build_graph_with(a: &ColorMatrix, limits: &Limits) -> Result<SimpleGraph> {
    let n = a.order();
    check_limit("G(A) vertex count", n, limits.max_graph_n.min(MAX_VERTICES))?;
    let k = a.k();
    let mut labels = Vec::with_capacity(n);
    for i in 0..k {
        for j in 0..k {
            for t in 0..a.get(i, j) as usize {
                labels.push(VertexLabel {
                    coords: vec![i, j],
                    copy: t,
                });
            }
        }
    }
    Ok(graph_from_coordinate_labels(labels))
}

/// Graph on labeled vertices, adjacent iff all coordinates differ.
pub(crate) fn graph_from_coordinate_labels(labels: Vec<VertexLabel>) -> SimpleGraph {
    let n = labels.len();
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in (u + 1)..n {
            let differ = labels[u]
                .coords
                .iter()
                .zip(&labels[v].coords)
                .all(|(a, b)| a != b);
            if differ {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
    }
    let g = SimpleGraph {
        n,
        rows,
        labels: Some(labels),
    };
    debug_assert!(labels_consistent(&g));
    g
}

/// Re-checks the labeled adjacency rule against the bit rows.
pub fn labels_consistent(g: &SimpleGraph) -> bool {
    let Some(labels) = g.labels() else {
        return true;
    };
    (0..g.n()).all(|u| {
        (0..g.n()).all(|v| {
            let expected = u != v
                && labels[u]
                    .coords
                    .iter()
                    .zip(&labels[v].coords)
                    .all(|(a, b)| a != b);
            g.has_edge(u, v) == expected
        })
    })
}

/// Complete multipartite graph with the given class sizes; classes occupy
/// consecutive vertex ranges.
pub fn complete_multipartite(sizes: &[usize]) -> Result<SimpleGraph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Precondition(
            "class sizes must be nonempty and positive".into(),
        ));
    }
    let n: usize = sizes.iter().sum();
    let mut g = SimpleGraph::empty(n)?;
    let all = full_mask(n);
    let mut start = 0;
    for &s in sizes {
        let class = full_mask(start + s) & !full_mask(start);
        for v in start..start + s {
            g.rows[v] = all & !class;
        }
        start += s;
    }
    Ok(g)
}

/// Class sizes of the balanced complete `r`-partite graph on `n` vertices,
/// larger classes first, empty classes dropped.
pub fn turan_class_sizes(n: usize, r: usize) -> Vec<usize> {
    assert!(r >= 1);
    (0..r)
        .map(|i| n / r + usize::from(i < n % r))
        .filter(|&s| s > 0)
        .collect()
}

/// The Turán graph `T(n, r)`.
pub fn turan_graph(n: usize, r: usize) -> Result<SimpleGraph> {
    if r == 0 {
        return Err(Error::Precondition("Turán graph needs r >= 1".into()));
    }
    if n == 0 {
        return SimpleGraph::empty(0);
    }
    complete_multipartite(&turan_class_sizes(n, r))
}
