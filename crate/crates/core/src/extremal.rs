//! Maximum edge counts of ambiguously k-colorable graphs.
//!
//! The maximum over `n`-vertex graphs is `g(n, k) = ex(n, K_{k+1}) -
//! max(1, floor(n / k))`, attained exactly by `G(A)` for tiny, small, very
//! special and mininormal matrices `A`. This module computes the formula,
//! the extremal graphs from those matrix families, and an exhaustive oracle
//! that knows nothing about matrices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::is_ambiguously_colorable;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, build_graph, canonical_form_with, graphs_up_to_iso, turan_class_sizes, SimpleGraph};
use crate::matrix::{enumerate_desirable, Family};
use crate::{in_pool, CanonicalCert, Limits};

/// `ex(n, K_{k+1})`: the edge count of the Turán graph `T(n, k)`, i.e. the
/// number of vertex pairs split between its classes.
pub fn turan_number(n: usize, k: usize) -> usize {
    assert!(k >= 1, "Turán number needs k >= 1");
    let sizes = turan_class_sizes(n, k);
    let mut total = 0;
    let mut before = 0;
    for s in sizes {
        total += before * s;
        before += s;
    }
    total
}

/// `ex(n, K_{k+1}) - max(1, floor(n / k))`.
///
/// Defined for `n >= 2` and `k >= 2`; below that no ambiguously k-colorable
/// graph on `n` vertices exists.
pub fn ambiguous_max_edges(n: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Domain(format!("no graph is ambiguously {k}-colorable")));
    }
    if n < 2 {
        return Err(Error::Domain(format!(
            "no ambiguously colorable graph on {n} vertices"
        )));
    }
    Ok(turan_number(n, k) - (n / k).max(1))
}

/// Data of the edge bound for spanning subgraphs of complete multipartite
/// graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaBoundInput {
    /// Partition of the vertex set into `k` classes (some may be empty).
    pub partition: Vec<u64>,
    /// Indices into `partition` of the selected classes.
    pub selected: Vec<usize>,
    pub n: usize,
    pub k: usize,
    /// `floor(n / k)`.
    pub alpha: usize,
    /// Vertices in the selected classes.
    pub m: usize,
    /// Pairs in distinct selected classes that are not edges of `G`.
    pub d: usize,
    /// Selected classes with at most `alpha - 1` vertices.
    pub r0: usize,
}

impl LemmaBoundInput {
    /// Validates the partition against `g` and computes `m`, `d` and `r0`.
    pub fn new(g: &SimpleGraph, partition: Vec<u64>, selected: Vec<usize>) -> Result<Self> {
        let n = g.n();
        let k = partition.len();
        if k == 0 {
            return Err(Error::Precondition("partition needs at least one class".into()));
        }
        let mut union = 0u64;
        for &c in &partition {
            if c & union != 0 {
                return Err(Error::Precondition("partition classes overlap".into()));
            }
            if !g.is_anticlique(c) {
                return Err(Error::Precondition("partition class is not an anticlique".into()));
            }
            union |= c;
        }
        if union != crate::graph::full_mask(n) {
            return Err(Error::Precondition("partition does not cover the vertex set".into()));
        }
        let alpha = n / k;
        let mut seen = 0u64;
        for &j in &selected {
            let class = *partition
                .get(j)
                .ok_or_else(|| Error::Precondition(format!("selected class {j} out of range")))?;
            if seen & bit(j) != 0 {
                return Err(Error::Precondition(format!("class {j} selected twice")));
            }
            seen |= bit(j);
            if class.count_ones() as usize > alpha {
                return Err(Error::Precondition(format!(
                    "selected class {j} has more than {alpha} vertices"
                )));
            }
        }
        let m = selected.iter().map(|&j| partition[j].count_ones() as usize).sum();
        let r0 = selected
            .iter()
            .filter(|&&j| (partition[j].count_ones() as usize) < alpha)
            .count();
        let mut d = 0;
        for (x, &p) in selected.iter().enumerate() {
            for &q in &selected[x + 1..] {
                for u in bits(partition[p]) {
                    d += (partition[q] & !g.neighbors(u)).count_ones() as usize;
                }
            }
        }
        Ok(LemmaBoundInput {
            partition,
            selected,
            n,
            k,
            alpha,
            m,
            d,
            r0,
        })
    }

    pub fn r(&self) -> usize {
        self.selected.len()
    }
}

/// `ex(n, K_{k+1}) - (2 (alpha r - m) - r0) - d`, evaluated in signed
/// arithmetic.
pub fn lemma_bound(input: &LemmaBoundInput) -> i64 {
    let ex = turan_number(input.n, input.k) as i64;
    let slack = 2 * (input.alpha as i64 * input.r() as i64 - input.m as i64) - input.r0 as i64;
    ex - slack - input.d as i64
}

/// An extremal graph and the matrix families that produce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalGraph {
    pub cert: CanonicalCert,
    pub families: Vec<Family>,
}

/// Graphs `G(A)` with exactly `g(n, k)` edges for `A` tiny, small, very
/// special or mininormal, deduplicated up to isomorphism and sorted by
/// certificate.
pub fn enumerate_extremal(n: usize, k: usize, limits: &Limits) -> Result<Vec<ExtremalGraph>> {
    let target = ambiguous_max_edges(n, k)?;
    let mut found: BTreeMap<CanonicalCert, Vec<Family>> = BTreeMap::new();
    for family in Family::EXTREMAL {
        for a in enumerate_desirable(k, n, &[family], limits.enumeration_cap)? {
            let g = build_graph(&a)?;
            if g.edge_count() != target {
                continue;
            }
            let tags = found.entry(canonical_form_with(&g, limits)?).or_default();
            if !tags.contains(&family) {
                tags.push(family);
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(cert, families)| ExtremalGraph { cert, families })
        .collect())
}

/// Maximum edge count over ambiguously k-colorable graphs on `n` vertices
/// and all graphs attaining it, by exhaustive search over graphs up to
/// isomorphism. `None` when no such graph exists.
pub fn brute_force_max_edges(n: usize, k: usize, limits: &Limits) -> Result<(Option<usize>, Vec<CanonicalCert>)> {
    let certs = graphs_up_to_iso(n, limits)?;
    let ambiguous: Vec<&CanonicalCert> = certs
        .par_iter()
        .filter(|c| is_ambiguously_colorable(&c.to_graph(), k))
        .collect();
    let best = ambiguous.iter().map(|c| c.edge_count()).max();
    let extremal = ambiguous
        .into_iter()
        .filter(|c| Some(c.edge_count()) == best)
        .cloned()
        .collect();
    Ok((best, extremal))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub formula_value: usize,
    pub oracle_value: Option<usize>,
    pub extremal: Vec<ExtremalGraph>,
    pub oracle_certs: Vec<CanonicalCert>,
    pub formula_agrees: bool,
    pub certs_agree: bool,
}

impl ExtremalReport {
    pub fn agrees(&self) -> bool {
        self.formula_agrees && self.certs_agree
    }
}

/// Compares formula and matrix families with the oracle for
/// `2 <= n <= max_n` and each `k` in `k_list`.
pub fn verify_turan_theorem(max_n: usize, k_list: &[usize], jobs: usize, limits: &Limits) -> Result<Vec<ExtremalReport>> {
    if max_n > limits.exhaustive_max_n {
        return Err(Error::ResourceLimit {
            what: "exhaustive graph order",
            value: max_n,
            limit: limits.exhaustive_max_n,
        });
    }
    in_pool(jobs, || {
        let mut reports = Vec::new();
        for n in 2..=max_n {
            for &k in k_list {
                let formula_value = ambiguous_max_edges(n, k)?;
                let extremal = enumerate_extremal(n, k, limits)?;
                let (oracle_value, oracle_certs) = brute_force_max_edges(n, k, limits)?;
                let family_certs: Vec<&CanonicalCert> = extremal.iter().map(|e| &e.cert).collect();
                reports.push(ExtremalReport {
                    n,
                    k,
                    formula_value,
                    oracle_value,
                    formula_agrees: oracle_value == Some(formula_value),
                    certs_agree: family_certs == oracle_certs.iter().collect::<Vec<_>>(),
                    extremal,
                    oracle_certs,
                });
            }
        }
        Ok(reports)
    })
}

/// TSV with columns `n k formula oracle n_extremal families`.
pub fn reports_to_tsv(reports: &[ExtremalReport]) -> String {
    let mut out = String::from("n\tk\tformula\toracle\tn_extremal\tfamilies\n");
    for r in reports {
        let oracle = r.oracle_value.map_or("-".to_string(), |v| v.to_string());
        let mut families: Vec<&str> = r
            .extremal
            .iter()
            .flat_map(|e| e.families.iter().map(|f| f.name()))
            .collect();
        families.sort_unstable();
        families.dedup();
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.k,
            r.formula_value,
            oracle,
            r.extremal.len(),
            families.join(",")
        );
    }
    out
}
