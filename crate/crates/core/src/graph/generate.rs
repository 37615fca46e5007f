//! Exhaustive generation of small graphs.

use std::collections::BTreeSet;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::{bit, canonical_form_with, CanonicalCert, SimpleGraph};
use crate::error::{check_limit, Result};
use crate::Limits;

static LEVELS: OnceLock<Mutex<Vec<Vec<CanonicalCert>>>> = OnceLock::new();

/// All graphs on `n` vertices up to isomorphism, as sorted canonical
/// certificates.
///
/// Level `n` is obtained by attaching a new vertex with every possible
/// neighborhood to each representative of level `n - 1` and deduplicating by
/// certificate; deleting any vertex of a graph lands in level `n - 1`, so
/// every isomorphism class is reached. Levels are cached per process and the
/// work of one level is spread over the current rayon pool.
pub fn graphs_up_to_iso(n: usize, limits: &Limits) -> Result<Vec<CanonicalCert>> {
    check_limit("exhaustive graph order", n, limits.exhaustive_max_n)?;
    let cache = LEVELS.get_or_init(|| {
        let empty = canonical_form_with(&SimpleGraph::default(), &Limits::default())
            .expect("empty graph canonizes");
        Mutex::new(vec![vec![empty]])
    });
    let canon_limits = Limits {
        canon_max_n: limits.canon_max_n.max(n),
        ..*limits
    };
    loop {
        let prev = {
            let levels = cache.lock().expect("graph cache poisoned");
            if levels.len() > n {
                return Ok(levels[n].clone());
            }
            levels.last().cloned().expect("level 0 present")
        };
        let next = extend_level(&prev, &canon_limits)?;
        let mut levels = cache.lock().expect("graph cache poisoned");
        if levels.len() == next_level_index(&prev) {
            levels.push(next);
        }
    }
}

fn next_level_index(prev: &[CanonicalCert]) -> usize {
    prev.first().map_or(0, |c| c.n()) + 1
}

fn extend_level(prev: &[CanonicalCert], limits: &Limits) -> Result<Vec<CanonicalCert>> {
    let m = prev.first().map_or(0, |c| c.n());
    let shards: Vec<Result<BTreeSet<CanonicalCert>>> = prev
        .par_iter()
        .map(|cert| {
            let base = cert.to_graph();
            let mut out = BTreeSet::new();
            for nbrs in 0u64..(1u64 << m) {
                let mut rows = base.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    if nbrs & bit(v) != 0 {
                        *row |= bit(m);
                    }
                }
                rows.push(nbrs);
                out.insert(canonical_form_with(&SimpleGraph::from_rows(rows), limits)?);
            }
            Ok(out)
        })
        .collect();
    let mut all = BTreeSet::new();
    for shard in shards {
        all.extend(shard?);
    }
    Ok(all.into_iter().collect())
}

/// Every labeled graph on `n` vertices (2^(n(n-1)/2) of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    assert!(n <= 11, "labeled enumeration is limited to 11 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |code| {
        let mut rows = vec![0u64; n];
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            if code & bit(idx) != 0 {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
        SimpleGraph::from_rows(rows)
    })
}
