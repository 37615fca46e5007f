use super::{bit, bits, full_mask, SimpleGraph};

/// Size of a maximum clique.
pub fn clique_number(g: &SimpleGraph) -> usize {
    maximum_clique(g).count_ones() as usize
}

/// A maximum clique as a vertex mask (branch and bound over bitsets).
pub fn maximum_clique(g: &SimpleGraph) -> u64 {
    let mut best = 0u64;
    expand(g, 0, full_mask(g.n()), &mut best);
    debug_assert!(is_clique(g, best));
    best
}

fn expand(g: &SimpleGraph, current: u64, mut candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while candidates != 0 {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        expand(g, current | bit(v), candidates & g.neighbors(v), best);
        candidates &= !bit(v);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

/// Clique check used by tests and assertions.
fn is_clique(g: &SimpleGraph, mask: u64) -> bool {
    bits(mask).all(|v| mask & !bit(v) & !g.neighbors(v) == 0)
}
