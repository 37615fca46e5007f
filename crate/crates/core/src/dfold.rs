//! Graphs with `d` distinct k-colorings and their tensor certificates.
//!
//! A tensor `A: {0..k}^d -> N` yields the graph with `A(i_1, ..., i_d)`
//! vertices per index tuple, two vertices adjacent iff their tuples differ in
//! every coordinate. Every coordinate then induces a k-coloring.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{count_colorings, enumerate_colorings};
use crate::error::{check_limit, Error, Result};
use crate::graph::{bit, bits, graph_from_coordinate_labels, graphs_up_to_iso, SimpleGraph, VertexLabel, MAX_VERTICES};
use crate::matrix::ColorMatrix;
use crate::Limits;

/// Largest number of tensor cells.
pub const MAX_CELLS: usize = 1_000_000;

/// Dense nonnegative tensor, row-major over index tuples (first index most
/// significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TensorJson", into = "TensorJson")]
pub struct ColorTensor {
    k: usize,
    d: usize,
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    k: usize,
    d: usize,
    entries_flat: Vec<u32>,
}

impl TryFrom<TensorJson> for ColorTensor {
    type Error = Error;

    fn try_from(t: TensorJson) -> Result<Self> {
        ColorTensor::new(t.k, t.d, t.entries_flat)
    }
}

impl From<ColorTensor> for TensorJson {
    fn from(t: ColorTensor) -> Self {
        TensorJson {
            k: t.k,
            d: t.d,
            entries_flat: t.entries,
        }
    }
}

fn cell_count(k: usize, d: usize) -> Option<usize> {
    (0..d).try_fold(1usize, |acc, _| acc.checked_mul(k))
}

impl ColorTensor {
    pub fn new(k: usize, d: usize, entries: Vec<u32>) -> Result<Self> {
        if k == 0 || d < 2 {
            return Err(Error::Precondition(format!("tensor needs k >= 1 and d >= 2, got k={k}, d={d}")));
        }
        let cells = cell_count(k, d).filter(|&c| c <= MAX_CELLS).ok_or(Error::ResourceLimit {
            what: "tensor cell count",
            value: usize::MAX,
            limit: MAX_CELLS,
        })?;
        if entries.len() != cells {
            return Err(Error::Parse(format!(
                "expected {cells} entries for k={k}, d={d}, got {}",
                entries.len()
            )));
        }
        Ok(ColorTensor { k, d, entries })
    }

    pub fn zeros(k: usize, d: usize) -> Result<Self> {
        let cells = cell_count(k, d).unwrap_or(usize::MAX).min(MAX_CELLS + 1);
        ColorTensor::new(k, d, vec![0; cells])
    }

    pub fn from_matrix(a: &ColorMatrix) -> Self {
        ColorTensor {
            k: a.k(),
            d: 2,
            entries: a.entries().to_vec(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Sum of all entries, the vertex count of the graph.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|&x| x as usize).sum()
    }

    fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.d);
        index.iter().fold(0, |acc, &i| {
            assert!(i < self.k);
            acc * self.k + i
        })
    }

    pub fn get(&self, index: &[usize]) -> u32 {
        self.entries[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: u32) {
        let o = self.offset(index);
        self.entries[o] = value;
    }

    fn tuple(&self, mut offset: usize) -> Vec<usize> {
        let mut t = vec![0; self.d];
        for slot in t.iter_mut().rev() {
            *slot = offset % self.k;
            offset /= self.k;
        }
        t
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tensor serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid tensor JSON: {e}")))
    }
}

/// The graph of a tensor with vertices `(i_1, ..., i_d, s)` in row-major
/// order.
pub fn build_graph_d(a: &ColorTensor) -> Result<SimpleGraph> {
    check_limit("tensor graph vertex count", a.order(), MAX_VERTICES)?;
    let mut labels = Vec::with_capacity(a.order());
    for (offset, &count) in a.entries.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let coords = a.tuple(offset);
        for s in 0..count as usize {
            labels.push(VertexLabel {
                coords: coords.clone(),
                copy: s,
            });
        }
    }
    Ok(graph_from_coordinate_labels(labels))
}

/// At least `d` pairwise distinct k-colorings.
pub fn is_dfold_colorable(g: &SimpleGraph, d: usize, k: usize) -> bool {
    count_colorings(g, k, d) >= d
}

/// d-fold k-colorable, and adding any missing edge leaves fewer than `d`
/// k-colorings.
pub fn is_maximal_dfold(g: &SimpleGraph, d: usize, k: usize) -> bool {
    is_dfold_colorable(g, d, k)
        && g
            .non_edges()
            .into_iter()
            .all(|(u, v)| count_colorings(&g.with_edge(u, v), k, d) < d)
}

/// `K_4` on `0..4` with the matching edges `0-1` and `2-3` each subdivided
/// twice: paths `0-4-5-1` and `2-6-7-3`.
pub fn seymour_example() -> SimpleGraph {
    SimpleGraph::from_edges(
        8,
        &[
            (0, 4),
            (4, 5),
            (5, 1),
            (2, 6),
            (6, 7),
            (7, 3),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
        ],
    )
    .expect("fixed example is well formed")
}

/// Number of perfect matchings, by pairing the lowest unmatched vertex.
pub fn count_perfect_matchings(g: &SimpleGraph) -> u64 {
    fn rec(g: &SimpleGraph, free: u64) -> u64 {
        if free == 0 {
            return 1;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !bit(v);
        bits(g.neighbors(v) & rest).map(|u| rec(g, rest & !bit(u))).sum()
    }
    if g.n() % 2 == 1 {
        return 0;
    }
    rec(g, crate::graph::full_mask(g.n()))
}

/// Disjoint union of `g1` and `g2` plus every edge between them; vertices of
/// `g2` are shifted by `g1.n()`.
pub fn join(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<SimpleGraph> {
    let n1 = g1.n();
    let n = n1 + g2.n();
    check_limit("join vertex count", n, MAX_VERTICES)?;
    let mut g = SimpleGraph::empty(n)?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(n1 + u, n1 + v);
    }
    for u in 0..n1 {
        for v in n1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Tensor recovered from the first `d` k-colorings of `g`, with the label
/// each vertex receives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorRecovery {
    pub tensor: ColorTensor,
    pub relabel: Vec<VertexLabel>,
}

/// Intersects the first `d` k-colorings: `A(i_1, ..., i_d)` counts the
/// vertices in class `i_t` of coloring `t` for all `t`.
///
/// Classes of the first coloring are labeled by smallest vertex; classes of
/// later colorings take the label of the first-coloring class they meet
/// most, greedily by decreasing intersection (ties by smallest vertex).
/// Succeeds only if the labeling maps `g` exactly onto the tensor graph,
/// which holds for every maximal d-fold k-colorable graph.
pub fn recover_tensor(g: &SimpleGraph, d: usize, k: usize) -> Result<TensorRecovery> {
    let colorings = enumerate_colorings(g, k, d);
    if colorings.len() < d || d < 2 {
        return Err(Error::Precondition(format!(
            "graph has {} of the {d} required {k}-colorings",
            colorings.len()
        )));
    }
    let first = colorings[0].class_masks();
    let mut labels_per_vertex = vec![Vec::with_capacity(d); g.n()];
    for coloring in &colorings {
        let classes = coloring.class_masks();
        let labels = greedy_labels(&first, &classes, k);
        for (class, &label) in classes.iter().zip(&labels) {
            for v in bits(*class) {
                labels_per_vertex[v].push(label);
            }
        }
    }
    let mut tensor = ColorTensor::zeros(k, d)?;
    let mut relabel = Vec::with_capacity(g.n());
    for coords in labels_per_vertex {
        let copy = tensor.get(&coords) as usize;
        tensor.set(&coords, copy as u32 + 1);
        relabel.push(VertexLabel { coords, copy });
    }
    let built = build_graph_d(&tensor)?;
    let built_labels = built.labels().expect("tensor graph is labeled");
    let position: Vec<usize> = relabel
        .iter()
        .map(|l| built_labels.iter().position(|x| x == l).expect("label present"))
        .collect();
    if g.permuted(&position) != built.unlabeled() {
        return Err(Error::ConstructionFailed(format!(
            "graph has {} edges but the tensor graph has {}",
            g.edge_count(),
            built.edge_count()
        )));
    }
    Ok(TensorRecovery { tensor, relabel })
}

fn greedy_labels(reference: &[u64], classes: &[u64], k: usize) -> Vec<usize> {
    let mut pairs: Vec<(u32, u32, usize, usize)> = Vec::new();
    for (j, &c) in classes.iter().enumerate() {
        for i in 0..k {
            let overlap = reference.get(i).map_or(0, |&r| (r & c).count_ones());
            pairs.push((overlap, c.trailing_zeros(), i, j));
        }
    }
    pairs.sort_by_key(|&(overlap, low, i, _)| (std::cmp::Reverse(overlap), low, i));
    let mut label = vec![usize::MAX; classes.len()];
    let mut used = 0u64;
    for (_, _, i, j) in pairs {
        if label[j] == usize::MAX && used & bit(i) == 0 {
            label[j] = i;
            used |= bit(i);
        }
    }
    label
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DfoldSurveyRow {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub graphs: usize,
    pub maximal: usize,
    /// Maximal graphs for which [`recover_tensor`] succeeded.
    pub recovered: usize,
    /// Distinct tensors seen, as JSON, for inspection.
    pub tensors: Vec<String>,
}

/// Exhaustive survey of maximal d-fold k-colorable graphs on `1..=max_n`
/// vertices up to isomorphism. Observational output only.
pub fn maximal_dfold_survey(max_n: usize, d_list: &[usize], k_list: &[usize], limits: &Limits) -> Result<Vec<DfoldSurveyRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let certs = graphs_up_to_iso(n, limits)?;
        for &d in d_list {
            for &k in k_list {
                let found: Vec<Option<String>> = certs
                    .par_iter()
                    .filter_map(|c| {
                        let g = c.to_graph();
                        is_maximal_dfold(&g, d, k)
                            .then(|| recover_tensor(&g, d, k).ok().map(|r| r.tensor.to_json()))
                    })
                    .collect();
                let mut tensors: Vec<String> = found.iter().flatten().cloned().collect();
                tensors.sort();
                tensors.dedup();
                rows.push(DfoldSurveyRow {
                    n,
                    d,
                    k,
                    graphs: certs.len(),
                    maximal: found.len(),
                    recovered: found.iter().filter(|t| t.is_some()).count(),
                    tensors,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;
    use crate::graph::{build_graph, clique_number};

    #[test]
    fn matrix_tensor_agree() {
        let a = ColorMatrix::from_rows(&[vec![1, 2, 0], vec![1, 3, 1], vec![1, 1, 1]]).unwrap();
        let t = ColorTensor::from_matrix(&a);
        assert_eq!(build_graph_d(&t).unwrap(), build_graph(&a).unwrap());
    }

    #[test]
    fn cube_tensor_is_perfect_matching() {
        let t = ColorTensor::new(2, 3, vec![1; 8]).unwrap();
        let g = build_graph_d(&t).unwrap();
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 1));
        assert_eq!(build_graph_d(&ColorTensor::zeros(3, 3).unwrap()).unwrap().n(), 0);
    }

    #[test]
    fn tensor_json() {
        let t = ColorTensor::new(2, 2, vec![1, 0, 2, 1]).unwrap();
        assert_eq!(t.to_json(), r#"{"k":2,"d":2,"entries_flat":[1,0,2,1]}"#);
        assert_eq!(ColorTensor::from_json(&t.to_json()).unwrap(), t);
        assert!(ColorTensor::from_json(r#"{"k":2,"d":2,"entries_flat":[1,0,2]}"#).is_err());
        assert!(ColorTensor::from_json(r#"{"k":2,"d":1,"entries_flat":[1,0]}"#).is_err());
    }

    #[test]
    fn perfect_matchings() {
        assert_eq!(count_perfect_matchings(&SimpleGraph::cycle(4).unwrap()), 2);
        assert_eq!(count_perfect_matchings(&SimpleGraph::complete(4).unwrap()), 3);
        assert_eq!(count_perfect_matchings(&SimpleGraph::complete(3).unwrap()), 0);
        assert_eq!(count_perfect_matchings(&seymour_example()), 3);
    }

    #[test]
    fn seymour_complement() {
        let h = seymour_example();
        assert!(h.is_triangle_free());
        let co = h.complement();
        assert_eq!(chromatic_number(&co), 4);
        assert_eq!(clique_number(&co), 3);
        assert!(is_maximal_dfold(&co, 3, 4));
        let rec = recover_tensor(&co, 3, 4).unwrap();
        assert_eq!(rec.tensor.order(), 8);
    }

    #[test]
    fn join_basics() {
        let k1 = SimpleGraph::complete(1).unwrap();
        assert_eq!(join(&k1, &k1).unwrap(), SimpleGraph::complete(2).unwrap());
        let g = join(&SimpleGraph::cycle(5).unwrap(), &SimpleGraph::path(3).unwrap()).unwrap();
        assert_eq!(chromatic_number(&g), 5);
    }

    #[test]
    fn small_dfold_predicates() {
        let k3 = SimpleGraph::complete(3).unwrap();
        assert!(!is_dfold_colorable(&k3, 2, 4));
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert!(is_maximal_dfold(&c4, 2, 3));
        assert!(is_dfold_colorable(&c4, 3, 3));
        assert!(!is_dfold_colorable(&c4, 4, 3));
    }

    #[test]
    fn survey_recovers_every_maximal_graph() {
        for row in maximal_dfold_survey(5, &[2, 3], &[2, 3], &Limits::default()).unwrap() {
            assert_eq!(row.maximal, row.recovered, "{row:?}");
        }
    }
}
