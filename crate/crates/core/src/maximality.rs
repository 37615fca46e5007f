//! Maximality checks, certificate reconstruction and the exhaustive
//! characterization harness.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{count_colorings, enumerate_colorings, is_ambiguously_colorable, is_colorable, Coloring};
use crate::error::{Error, Result};
use crate::graph::{bits, build_graph, graphs_up_to_iso, SimpleGraph, VertexLabel};
use crate::matching::perfect_matching;
use crate::matrix::{classify, enumerate_desirable, ColorMatrix, Family};
use crate::{in_pool, Limits};

/// Ambiguously k-colorable, and adding any missing edge leaves at most one
/// k-coloring.
pub fn is_maximal_ambiguous(g: &SimpleGraph, k: usize) -> bool {
    is_ambiguously_colorable(g, k)
        && g
            .non_edges()
            .into_iter()
            .all(|(u, v)| count_colorings(&g.with_edge(u, v), k, 2) <= 1)
}

/// k-colorable, and adding any missing edge destroys k-colorability.
pub fn is_maximal_colorable(g: &SimpleGraph, k: usize) -> bool {
    is_colorable(g, k)
        && g
            .non_edges()
            .into_iter()
            .all(|(u, v)| !is_colorable(&g.with_edge(u, v), k))
}

/// Which argument produced the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReconstructionCase {
    /// The graph is (k-1)-colorable and complete multipartite; the matrix is
    /// diagonal (tiny or small).
    Multipartite,
    /// Two k-colorings with exactly k classes each, paired by a perfect
    /// matching of their intersection graph.
    TwoColorings,
}

/// Intermediate data of [`reconstruct_matrix`].
#[derive(Debug, Clone, Serialize)]
pub struct ReconstructionTrace {
    pub case: ReconstructionCase,
    /// The two distinct k-colorings used (first two in enumeration order).
    pub colorings: Vec<Coloring>,
    /// Bipartite graph between the classes: `h[a]` has bit `b` iff class `a`
    /// of the first coloring meets class `b` of the second.
    pub h: Vec<u64>,
    /// Perfect matching of `h`: class `a` is paired with class `matching[a]`.
    pub matching: Vec<usize>,
    /// Number of paired classes that differ; they receive indices `0..r`.
    pub r: usize,
    pub matrix: ColorMatrix,
    /// Label `(i, j, t)` assigned to each vertex of the input graph.
    pub relabel: Vec<VertexLabel>,
}

/// Recovers a desirable matrix `A` and an explicit isomorphism from `g`
/// onto `G(A)`.
///
/// Only ambiguity is required up front. The result is accepted only if `A`
/// is desirable and the vertex relabeling maps `g` exactly onto `G(A)`;
/// since both colorings of `g` become colorings of `G(A)` under that map,
/// `g` is always a spanning subgraph of the image, so the check amounts to
/// comparing edge counts. Non-maximal inputs therefore fail with
/// [`Error::ConstructionFailed`].
pub fn reconstruct_matrix(g: &SimpleGraph, k: usize) -> Result<(ColorMatrix, ReconstructionTrace)> {
    if !is_ambiguously_colorable(g, k) {
        return Err(Error::NotAmbiguous { k });
    }
    let colorings = enumerate_colorings(g, k, 2);
    let trace = if is_colorable(g, k - 1) {
        from_multipartite(g, k, colorings)?
    } else {
        from_two_colorings(g, k, colorings)?
    };
    let class = classify(&trace.matrix);
    if !class.verdict.is_desirable() {
        return Err(Error::ConstructionFailed(format!(
            "recovered matrix is not desirable ({})",
            class.summary()
        )));
    }
    let built = build_graph(&trace.matrix)?;
    let position: Vec<usize> = trace
        .relabel
        .iter()
        .map(|l| {
            built
                .labels()
                .expect("G(A) is labeled")
                .iter()
                .position(|x| x == l)
                .expect("every relabel target is a vertex of G(A)")
        })
        .collect();
    if g.permuted(&position) != built.unlabeled() {
        return Err(Error::ConstructionFailed(format!(
            "graph has {} edges but G(A) has {}",
            g.edge_count(),
            built.edge_count()
        )));
    }
    Ok((trace.matrix.clone(), trace))
}

fn from_multipartite(g: &SimpleGraph, k: usize, colorings: Vec<Coloring>) -> Result<ReconstructionTrace> {
    // Classes of a complete multipartite graph are the components of the
    // complement, which are then cliques there.
    let co = g.complement();
    let mut seen = 0u64;
    let mut classes = Vec::new();
    for v in 0..g.n() {
        if seen & (1 << v) != 0 {
            continue;
        }
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = co.neighbors(u) & !comp;
            comp |= new;
            frontier |= new;
        }
        seen |= comp;
        classes.push(comp);
    }
    if !classes.iter().all(|&c| g.is_anticlique(c)) {
        return Err(Error::ConstructionFailed("graph is not complete multipartite".into()));
    }
    if classes.len() > k - 1 {
        return Err(Error::ConstructionFailed(format!(
            "{} parts exceed k - 1 = {}",
            classes.len(),
            k - 1
        )));
    }
    let mut diag = vec![0u32; k];
    let mut relabel = vec![
        VertexLabel {
            coords: vec![],
            copy: 0
        };
        g.n()
    ];
    for (i, &c) in classes.iter().enumerate() {
        diag[i] = c.count_ones();
        for (t, v) in bits(c).enumerate() {
            relabel[v] = VertexLabel {
                coords: vec![i, i],
                copy: t,
            };
        }
    }
    Ok(ReconstructionTrace {
        case: ReconstructionCase::Multipartite,
        colorings,
        h: Vec::new(),
        matching: Vec::new(),
        r: 0,
        matrix: ColorMatrix::diagonal(&diag)?,
        relabel,
    })
}

fn from_two_colorings(g: &SimpleGraph, k: usize, colorings: Vec<Coloring>) -> Result<ReconstructionTrace> {
    let a = colorings[0].class_masks();
    let b = colorings[1].class_masks();
    // Without a (k-1)-coloring both colorings use exactly k classes.
    debug_assert!(a.len() == k && b.len() == k);
    let h: Vec<u64> = a
        .iter()
        .map(|&x| (0..k).filter(|&j| x & b[j] != 0).fold(0u64, |acc, j| acc | (1 << j)))
        .collect();
    let matching = perfect_matching(&h)
        .ok_or_else(|| Error::ConstructionFailed("class intersection graph has no perfect matching".into()))?;
    // Differing pairs first, each group ordered by smallest vertex.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (a[i] == b[matching[i]], a[i].trailing_zeros()));
    let r = order.iter().filter(|&&i| a[i] != b[matching[i]]).count();
    let mut matrix = ColorMatrix::zeros(k)?;
    let mut relabel = vec![
        VertexLabel {
            coords: vec![],
            copy: 0
        };
        g.n()
    ];
    for (p, &ip) in order.iter().enumerate() {
        for (q, &iq) in order.iter().enumerate() {
            let cell = a[ip] & b[matching[iq]];
            matrix.set(p, q, cell.count_ones());
            for (t, v) in bits(cell).enumerate() {
                relabel[v] = VertexLabel {
                    coords: vec![p, q],
                    copy: t,
                };
            }
        }
    }
    Ok(ReconstructionTrace {
        case: ReconstructionCase::TwoColorings,
        colorings,
        h,
        matching,
        r,
        matrix,
        relabel,
    })
}

/// A graph or matrix on which the characterization failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub matrix: Option<ColorMatrix>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Row {
    pub n: usize,
    pub k: usize,
    /// Graphs on `n` vertices up to isomorphism.
    pub graphs: usize,
    pub maximal_ambiguous: usize,
    /// Graphs for which reconstruction produced a certificate.
    pub matched_by_matrix: usize,
    /// Desirable `k × k` matrices with entry sum `n` (forward direction).
    pub desirable_matrices: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub max_n: usize,
    pub k_list: Vec<usize>,
    pub rows: Vec<Theorem1Row>,
}

impl Theorem1Report {
    pub fn counterexample_count(&self) -> usize {
        self.rows.iter().map(|r| r.counterexamples.len()).sum()
    }
}

/// Checks, for every graph on `1..=max_n` vertices up to isomorphism and
/// every `k` in `k_list`, that maximal ambiguity holds exactly when
/// reconstruction yields a certificate; and that `G(A)` is maximal
/// ambiguous for every desirable `A` of order at most `max_n`.
pub fn verify_theorem1(max_n: usize, k_list: &[usize], jobs: usize, limits: &Limits) -> Result<Theorem1Report> {
    if max_n > limits.exhaustive_max_n {
        return Err(Error::ResourceLimit {
            what: "exhaustive graph order",
            value: max_n,
            limit: limits.exhaustive_max_n,
        });
    }
    if let Some(&k) = k_list.iter().find(|&&k| k == 0) {
        return Err(Error::Precondition(format!("k must be positive, got {k}")));
    }
    in_pool(jobs, || {
        let mut rows = Vec::new();
        for n in 1..=max_n {
            let certs = graphs_up_to_iso(n, limits)?;
            for &k in k_list {
                rows.push(theorem1_row(n, k, &certs, limits)?);
            }
        }
        Ok(Theorem1Report {
            max_n,
            k_list: k_list.to_vec(),
            rows,
        })
    })
}

fn theorem1_row(n: usize, k: usize, certs: &[crate::CanonicalCert], limits: &Limits) -> Result<Theorem1Row> {
    let outcomes: Vec<(bool, bool, Option<Counterexample>)> = certs
        .par_iter()
        .map(|cert| {
            let g = cert.to_graph();
            let maximal = is_maximal_ambiguous(&g, k);
            let rebuilt = reconstruct_matrix(&g, k);
            let matched = rebuilt.is_ok();
            let bad = (maximal != matched).then(|| Counterexample {
                n,
                edges: g.edges(),
                matrix: rebuilt.as_ref().ok().map(|(a, _)| a.clone()),
                reason: match &rebuilt {
                    Ok(_) => "not maximal ambiguous but reconstructed".into(),
                    Err(e) => format!("maximal ambiguous but reconstruction failed: {e}"),
                },
            });
            (maximal, matched, bad)
        })
        .collect();
    let mut counterexamples: Vec<Counterexample> = outcomes.iter().filter_map(|o| o.2.clone()).collect();

    let matrices = enumerate_desirable(k, n, &Family::ALL, limits.enumeration_cap)?;
    let forward: Vec<Counterexample> = matrices
        .par_iter()
        .filter_map(|a| {
            let g = match build_graph(a) {
                Ok(g) => g,
                Err(e) => return Some(Err(e)),
            };
            (!is_maximal_ambiguous(&g, k)).then(|| {
                Ok(Counterexample {
                    n,
                    edges: g.edges(),
                    matrix: Some(a.clone()),
                    reason: "G(A) of a desirable matrix is not maximal ambiguous".into(),
                })
            })
        })
        .collect::<Result<_>>()?;
    counterexamples.extend(forward);

    Ok(Theorem1Row {
        n,
        k,
        graphs: certs.len(),
        maximal_ambiguous: outcomes.iter().filter(|o| o.0).count(),
        matched_by_matrix: outcomes.iter().filter(|o| o.1).count(),
        desirable_matrices: matrices.len(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::matrix::Verdict;

    fn normal3() -> ColorMatrix {
        ColorMatrix::from_rows(&[vec![1, 2, 0], vec![1, 3, 1], vec![1, 1, 1]]).unwrap()
    }

    #[test]
    fn four_cycle() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert!(is_maximal_ambiguous(&c4, 3));
        assert!(!is_maximal_ambiguous(&c4, 4));
        assert!(!is_maximal_colorable(&c4, 3));
        let (a, trace) = reconstruct_matrix(&c4, 3).unwrap();
        assert_eq!(trace.case, ReconstructionCase::Multipartite);
        assert_eq!(classify(&a).verdict, Verdict::Small);
        let mut diag: Vec<u32> = (0..3).map(|i| a.get(i, i)).collect();
        diag.sort_unstable();
        assert_eq!(diag, vec![0, 2, 2]);
    }

    #[test]
    fn path_is_tiny() {
        let p3 = SimpleGraph::path(3).unwrap();
        assert!(is_maximal_ambiguous(&p3, 4));
        let (a, _) = reconstruct_matrix(&p3, 4).unwrap();
        assert_eq!(classify(&a).verdict, Verdict::Tiny);
        let mut diag: Vec<u32> = (0..4).map(|i| a.get(i, i)).collect();
        diag.sort_unstable();
        assert_eq!(diag, vec![0, 0, 1, 2]);
    }

    #[test]
    fn complete_graphs() {
        for n in 1..5 {
            let kn = SimpleGraph::complete(n).unwrap();
            for k in 1..6 {
                assert!(!is_maximal_ambiguous(&kn, k));
            }
            assert_eq!(reconstruct_matrix(&kn, n + 1).unwrap_err(), Error::NotAmbiguous { k: n + 1 });
        }
        assert!(is_maximal_colorable(&crate::graph::complete_multipartite(&[2, 2, 2]).unwrap(), 3));
        assert!(!is_maximal_colorable(&SimpleGraph::complete(4).unwrap(), 3));
    }

    #[test]
    fn normal_round_trip() {
        let g = build_graph(&normal3()).unwrap();
        assert!(is_maximal_ambiguous(&g, 3));
        let (a, trace) = reconstruct_matrix(&g, 3).unwrap();
        assert_eq!(trace.case, ReconstructionCase::TwoColorings);
        assert_eq!(trace.r, 3);
        assert_eq!(a.order(), 11);
        assert_eq!(classify(&a).verdict, Verdict::Normal);
        assert!(are_isomorphic(&g, &build_graph(&a).unwrap()).unwrap());
    }

    #[test]
    fn non_maximal_ambiguous_graph_is_rejected() {
        // Two disjoint edges with k = 3: ambiguous, and the chord 0-2 keeps
        // two colorings, so not maximal.
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_ambiguously_colorable(&g, 3));
        assert!(!is_maximal_ambiguous(&g, 3));
        assert!(matches!(reconstruct_matrix(&g, 3), Err(Error::ConstructionFailed(_))));
    }

    #[test]
    fn theorem1_small() {
        let report = verify_theorem1(5, &[2, 3, 4], 1, &Limits::default()).unwrap();
        assert_eq!(report.counterexample_count(), 0);
        let one = report.rows.iter().filter(|r| r.n == 1);
        for row in one {
            assert_eq!(row.maximal_ambiguous, 0);
        }
        let c4_row = report.rows.iter().find(|r| r.n == 4 && r.k == 3).unwrap();
        assert!(c4_row.maximal_ambiguous >= 1);
        assert!(c4_row.desirable_matrices >= 3);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            verify_theorem1(8, &[2], 1, &Limits::default()),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
