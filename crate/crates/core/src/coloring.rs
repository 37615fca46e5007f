//! k-colorings as unordered partitions of the vertex set into anticliques.
//!
//! A coloring is stored as a restricted-growth string: vertex `v` gets class
//! index `c[v]`, where `c[0] = 0` and each `c[v]` is at most one more than
//! the largest index used before `v`. Two colorings are equal exactly when
//! they describe the same partition. The empty graph on zero vertices has
//! exactly one coloring, the empty partition.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{bit, bits, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Coloring {
    classes: Vec<u8>,
}

impl Coloring {
    /// Wraps a restricted-growth string; returns `None` if it is not one.
    pub fn from_rgs(classes: Vec<u8>) -> Option<Self> {
        let mut next = 0u8;
        for &c in &classes {
            if c > next {
                return None;
            }
            if c == next {
                next += 1;
            }
        }
        Some(Coloring { classes })
    }

    /// Canonical coloring from any class assignment.
    pub fn from_assignment(assignment: &[usize]) -> Self {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let classes = assignment
            .iter()
            .map(|&a| match map.iter().find(|(x, _)| *x == a) {
                Some(&(_, c)) => c,
                None => {
                    let c = map.len() as u8;
                    map.push((a, c));
                    c
                }
            })
            .collect();
        Coloring { classes }
    }

    pub fn rgs(&self) -> &[u8] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v] as usize
    }

    pub fn num_classes(&self) -> usize {
        self.classes.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Classes as vertex masks, ordered by smallest member.
    pub fn class_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.num_classes()];
        for (v, &c) in self.classes.iter().enumerate() {
            masks[c as usize] |= bit(v);
        }
        masks
    }

    /// Every class is an anticlique of `g`.
    pub fn is_proper_for(&self, g: &SimpleGraph) -> bool {
        self.classes.len() == g.n() && self.class_masks().iter().all(|&m| g.is_anticlique(m))
    }

    /// One line per class, members space-separated, classes ordered by
    /// smallest member.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for mask in self.class_masks() {
            let members: Vec<String> = bits(mask).map(|v| v.to_string()).collect();
            out.push_str(&members.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Visits the k-colorings of `g` in lexicographic restricted-growth order
/// until `visit` breaks.
pub fn for_each_coloring(g: &SimpleGraph, k: usize, mut visit: impl FnMut(&[u8]) -> ControlFlow<()>) {
    let n = g.n();
    if n == 0 {
        let _ = visit(&[]);
        return;
    }
    if k == 0 {
        return;
    }
    let mut assignment = vec![0u8; n];
    let mut masks = vec![0u64; k.min(n)];
    let _ = descend(g, k.min(n), 0, 0, &mut assignment, &mut masks, &mut visit);
}

fn descend(
    g: &SimpleGraph,
    k: usize,
    v: usize,
    used: usize,
    assignment: &mut [u8],
    masks: &mut [u64],
    visit: &mut impl FnMut(&[u8]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if v == g.n() {
        return visit(assignment);
    }
    let nbrs = g.neighbors(v);
    for c in 0..(used + 1).min(k) {
        if masks[c] & nbrs != 0 {
            continue;
        }
        masks[c] |= bit(v);
        assignment[v] = c as u8;
        let flow = descend(g, k, v + 1, used.max(c + 1), assignment, masks, visit);
        masks[c] &= !bit(v);
        flow?;
    }
    ControlFlow::Continue(())
}

/// Up to `limit` distinct k-colorings in lexicographic order.
pub fn enumerate_colorings(g: &SimpleGraph, k: usize, limit: usize) -> Vec<Coloring> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for_each_coloring(g, k, |rgs| {
        out.push(Coloring {
            classes: rgs.to_vec(),
        });
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    debug_assert!(out.iter().all(|c| c.is_proper_for(g)));
    out
}

/// Number of k-colorings, saturating at `cap`.
pub fn count_colorings(g: &SimpleGraph, k: usize, cap: usize) -> usize {
    let mut count = 0;
    if cap == 0 {
        return 0;
    }
    for_each_coloring(g, k, |_| {
        count += 1;
        if count >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    count
}

pub fn is_colorable(g: &SimpleGraph, k: usize) -> bool {
    count_colorings(g, k, 1) >= 1
}

/// Least `k` admitting a k-coloring (0 for the graph without vertices).
pub fn chromatic_number(g: &SimpleGraph) -> usize {
    (0..=g.n())
        .find(|&k| is_colorable(g, k))
        .expect("n colors always suffice")
}

pub fn is_ambiguously_colorable(g: &SimpleGraph, k: usize) -> bool {
    count_colorings(g, k, 2) >= 2
}

pub fn is_uniquely_colorable(g: &SimpleGraph, k: usize) -> bool {
    count_colorings(g, k, 2) == 1
}
