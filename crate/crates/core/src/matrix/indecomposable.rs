//! Full indecomposability and the nonzero-walk witnesses it guarantees.

use std::collections::VecDeque;

use serde::Serialize;

use super::ColorMatrix;
use crate::error::{Error, Result};
use crate::matching::perfect_matching;
use crate::Limits;

/// How to decide full indecomposability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiAlgorithm {
    /// Reference method: every nonempty proper row subset `I` is checked for
    /// `r - |I|` columns that vanish on all of `I`.
    Subsets,
    /// Perfect matching on the support, then strong connectivity of the
    /// digraph `p -> q` whenever `M(p, sigma(q)) != 0`.
    Matching,
}

/// True iff `m` has no `s × (r - s)` zero submatrix, `1 <= s <= r - 1`.
/// A `1 × 1` matrix counts as fully indecomposable iff its entry is nonzero.
///
/// Uses subset enumeration up to the default bound and matching above it.
pub fn is_fully_indecomposable(m: &ColorMatrix) -> bool {
    let limits = Limits::default();
    let algo = if m.k() <= limits.fi_subset_max {
        FiAlgorithm::Subsets
    } else {
        FiAlgorithm::Matching
    };
    fully_indecomposable_by(m, algo, &limits).expect("algorithm chosen within its bound")
}

pub fn fully_indecomposable_by(m: &ColorMatrix, algo: FiAlgorithm, limits: &Limits) -> Result<bool> {
    let r = m.k();
    if r == 1 {
        return Ok(m.get(0, 0) != 0);
    }
    match algo {
        FiAlgorithm::Subsets => {
            if r > limits.fi_subset_max {
                return Err(Error::ResourceLimit {
                    what: "subset enumeration block size",
                    value: r,
                    limit: limits.fi_subset_max,
                });
            }
            Ok(by_subsets(m))
        }
        FiAlgorithm::Matching => Ok(by_matching(m)),
    }
}

fn support_rows(m: &ColorMatrix) -> Vec<u64> {
    (0..m.k())
        .map(|i| {
            (0..m.k())
                .filter(|&j| m.get(i, j) != 0)
                .fold(0u64, |acc, j| acc | (1 << j))
        })
        .collect()
}

fn by_subsets(m: &ColorMatrix) -> bool {
    let r = m.k();
    let rows = support_rows(m);
    let all = (1u64 << r) - 1;
    (1u64..all).all(|subset| {
        let covered = (0..r)
            .filter(|&i| subset & (1 << i) != 0)
            .fold(0u64, |acc, i| acc | rows[i]);
        let zero_cols = (all & !covered).count_ones();
        zero_cols < r as u32 - subset.count_ones()
    })
}

fn by_matching(m: &ColorMatrix) -> bool {
    let r = m.k();
    let rows = support_rows(m);
    let Some(sigma) = perfect_matching(&rows) else {
        return false;
    };
    // Row p reaches row q when column sigma(q) is in the support of row p.
    let succ: Vec<u64> = (0..r)
        .map(|p| {
            (0..r)
                .filter(|&q| q != p && rows[p] & (1 << sigma[q]) != 0)
                .fold(0u64, |acc, q| acc | (1 << q))
        })
        .collect();
    let mut pred = vec![0u64; r];
    for p in 0..r {
        for q in 0..r {
            if succ[p] & (1 << q) != 0 {
                pred[q] |= 1 << p;
            }
        }
    }
    let all = (1u64 << r) - 1;
    reach(&succ, 0) == all && reach(&pred, 0) == all
}

fn reach(adj: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

/// Index sequence `f_0, ..., f_l` with `l >= 3`, consecutive indices
/// distinct, every step `M(f_{h-1}, f_h)` nonzero, and
/// `(f_0, f_1) = (f_{l-1}, f_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSequence(pub Vec<usize>);

impl WitnessSequence {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Number of steps `l`.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks all three defining conditions against `m`.
    pub fn is_valid_for(&self, m: &ColorMatrix) -> bool {
        let f = &self.0;
        let l = self.len();
        l >= 3
            && f.iter().all(|&x| x < m.k())
            && f.windows(2).all(|w| w[0] != w[1] && m.get(w[0], w[1]) != 0)
            && (f[0], f[1]) == (f[l - 1], f[l])
    }
}

/// Closed nonzero walk starting and ending with the step `(i, j)`.
///
/// Breadth-first search from `j` over the steps `p -> q` (`p != q`,
/// `M(p, q) != 0`) reaches `i` whenever `m` is fully indecomposable:
/// otherwise the reached set `S` and its complement would bound a zero
/// `|S| × (r - |S|)` block.
pub fn witness_sequence(m: &ColorMatrix, i: usize, j: usize) -> Result<WitnessSequence> {
    let r = m.k();
    if i >= r || j >= r {
        return Err(Error::Precondition(format!("index out of range for size {r}")));
    }
    if i == j {
        return Err(Error::Precondition("witness needs distinct indices".into()));
    }
    if m.get(i, j) == 0 {
        return Err(Error::Precondition(format!("entry ({i}, {j}) is zero")));
    }
    if !is_fully_indecomposable(m) {
        return Err(Error::Precondition("matrix is not fully indecomposable".into()));
    }
    let mut parent = vec![usize::MAX; r];
    parent[j] = j;
    let mut queue = VecDeque::from([j]);
    while let Some(p) = queue.pop_front() {
        if p == i {
            break;
        }
        for q in 0..r {
            if q != p && m.get(p, q) != 0 && parent[q] == usize::MAX {
                parent[q] = p;
                queue.push_back(q);
            }
        }
    }
    assert!(
        parent[i] != usize::MAX,
        "fully indecomposable matrix must admit a closed walk through ({i}, {j})"
    );
    let mut path = vec![i];
    let mut v = i;
    while v != j {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    let mut seq = Vec::with_capacity(path.len() + 2);
    seq.push(i);
    seq.extend(path);
    seq.push(j);
    let w = WitnessSequence(seq);
    debug_assert!(w.is_valid_for(m));
    Ok(w)
}
