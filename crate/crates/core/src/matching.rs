//! Maximum bipartite matching (Hopcroft–Karp) on bit-mask adjacency.
//!
//! Left vertex `a` is adjacent to right vertex `b` iff `adj[a] & (1 << b) != 0`.
//! Neighbors are always scanned in increasing index order, so results are
//! deterministic.

use std::collections::VecDeque;

use crate::graph::bits;

const UNMATCHED: usize = usize::MAX;

/// Maximum matching; `result[a]` is the right partner of left vertex `a`.
pub fn maximum_matching(adj: &[u64], right: usize) -> Vec<Option<usize>> {
    assert!(right <= 64, "right side exceeds 64 vertices");
    let left = adj.len();
    let mut match_l = vec![UNMATCHED; left];
    let mut match_r = vec![UNMATCHED; right];
    let mut dist = vec![0usize; left];
    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for a in 0..left {
            if match_l[a] == UNMATCHED {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for b in bits(adj[a]) {
                let c = match_r[b];
                if c == UNMATCHED {
                    found = true;
                } else if dist[c] == usize::MAX {
                    dist[c] = dist[a] + 1;
                    queue.push_back(c);
                }
            }
        }
        if !found {
            break;
        }
        for a in 0..left {
            if match_l[a] == UNMATCHED {
                augment(a, adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }
    match_l
        .into_iter()
        .map(|b| (b != UNMATCHED).then_some(b))
        .collect()
}

fn augment(
    a: usize,
    adj: &[u64],
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for b in bits(adj[a]) {
        let c = match_r[b];
        if c == UNMATCHED || (dist[c] == dist[a] + 1 && augment(c, adj, match_l, match_r, dist)) {
            match_l[a] = b;
            match_r[b] = a;
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// Perfect matching between equally sized sides, if one exists.
pub fn perfect_matching(adj: &[u64]) -> Option<Vec<usize>> {
    maximum_matching(adj, adj.len()).into_iter().collect()
}

/// Hall's condition checked directly over all left subsets (test oracle
/// for small sides).
pub fn hall_condition_holds(adj: &[u64]) -> bool {
    let left = adj.len();
    assert!(left <= 20);
    (1u32..(1 << left)).all(|subset| {
        let nbrs = (0..left)
            .filter(|&a| subset & (1 << a) != 0)
            .fold(0u64, |acc, a| acc | adj[a]);
        nbrs.count_ones() >= subset.count_ones()
    })
}
