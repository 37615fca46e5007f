//! Exhaustive generation of desirable matrices with a given entry sum.

use std::collections::HashSet;
use std::str::FromStr;

use super::{classify, is_fully_indecomposable, ColorMatrix, Verdict};
use crate::error::{Error, Result};

/// Matrix families that can be requested from [`enumerate_desirable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Family {
    Tiny,
    Small,
    Special,
    /// Special and (a)-, (b)- or (c)-special.
    VerySpecial,
    Normal,
    Mininormal,
}

impl Family {
    /// Every desirable matrix.
    pub const ALL: [Family; 4] = [Family::Tiny, Family::Small, Family::Special, Family::Normal];
    /// The families realizing the maximum edge count.
    pub const EXTREMAL: [Family; 4] = [
        Family::Tiny,
        Family::Small,
        Family::VerySpecial,
        Family::Mininormal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tiny => "tiny",
            Family::Small => "small",
            Family::Special => "special",
            Family::VerySpecial => "very-special",
            Family::Normal => "normal",
            Family::Mininormal => "mininormal",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tiny" => Family::Tiny,
            "small" => Family::Small,
            "special" => Family::Special,
            "very-special" => Family::VerySpecial,
            "normal" => Family::Normal,
            "mininormal" => Family::Mininormal,
            other => return Err(Error::Parse(format!("unknown matrix family {other:?}"))),
        })
    }
}

/// All desirable `k × k` matrices with entry sum `n` that belong to one of
/// `families`, in a deterministic order without repetitions.
///
/// Fails with a resource error once more than `cap` matrices would be
/// produced.
pub fn enumerate_desirable(k: usize, n: usize, families: &[Family], cap: usize) -> Result<Vec<ColorMatrix>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut out = Collector {
        items: Vec::new(),
        seen: HashSet::new(),
        cap,
    };
    for &family in families {
        match family {
            Family::Tiny | Family::Small => {
                let want = if family == Family::Tiny { Verdict::Tiny } else { Verdict::Small };
                for_each_vector(&vec![0; k], &vec![2; k], n, &mut |diag| {
                    let a = ColorMatrix::diagonal(diag)?;
                    if classify(&a).verdict == want {
                        out.push(a)?;
                    }
                    Ok(())
                })?;
            }
            Family::Special | Family::VerySpecial => {
                if k < 2 || n < k + 1 {
                    continue;
                }
                for_each_vector(&vec![1; k], &vec![u32::MAX; k], n - 1, &mut |diag| {
                    for i in 0..k {
                        for j in 0..k {
                            if i == j {
                                continue;
                            }
                            let mut a = ColorMatrix::diagonal(diag)?;
                            a.set(i, j, 1);
                            let class = classify(&a);
                            debug_assert_eq!(class.verdict, Verdict::Special);
                            if family == Family::Special || !class.special_tags.is_empty() {
                                out.push(a)?;
                            }
                        }
                    }
                    Ok(())
                })?;
            }
            Family::Normal => normal_matrices(k, n, &mut out)?,
            Family::Mininormal => {
                if k < 2 || n < k + 2 {
                    continue;
                }
                for block in index_subsets(k, 2) {
                    let rest: Vec<usize> = (0..k).filter(|i| !block.contains(i)).collect();
                    for_each_vector(&vec![1; k - 2], &vec![u32::MAX; k - 2], n - 4, &mut |d| {
                        let mut a = ColorMatrix::zeros(k)?;
                        for &p in &block {
                            for &q in &block {
                                a.set(p, q, 1);
                            }
                        }
                        for (&i, &v) in rest.iter().zip(d) {
                            a.set(i, i, v);
                        }
                        if classify(&a).mininormal {
                            out.push(a)?;
                        }
                        Ok(())
                    })?;
                }
            }
        }
    }
    Ok(out.items)
}

struct Collector {
    items: Vec<ColorMatrix>,
    seen: HashSet<ColorMatrix>,
    cap: usize,
}

impl Collector {
    fn push(&mut self, a: ColorMatrix) -> Result<()> {
        if self.seen.contains(&a) {
            return Ok(());
        }
        if self.items.len() >= self.cap {
            return Err(Error::ResourceLimit {
                what: "matrix enumeration size",
                value: self.cap + 1,
                limit: self.cap,
            });
        }
        self.seen.insert(a.clone());
        self.items.push(a);
        Ok(())
    }
}

/// Normal matrices: a block index set `P` with `|P| = r >= 2` carrying a
/// fully indecomposable `M` with positive diagonal, positive diagonal
/// elsewhere. Each row of `M` needs an off-diagonal unit, so `n >= k + r`.
fn normal_matrices(k: usize, n: usize, out: &mut Collector) -> Result<()> {
    for r in 2..=k {
        if n < k + r {
            break;
        }
        for block in index_subsets(k, r) {
            let rest: Vec<usize> = (0..k).filter(|i| !block.contains(i)).collect();
            // Sum carried by M, from its minimum 2r up to what D leaves.
            for m_sum in 2 * r..=(n - (k - r)) {
                let mut m_mins = vec![0u32; r * r];
                for i in 0..r {
                    m_mins[i * r + i] = 1;
                }
                let m_maxs = vec![u32::MAX; r * r];
                let mut blocks: Vec<ColorMatrix> = Vec::new();
                for_each_vector(&m_mins, &m_maxs, m_sum, &mut |cells| {
                    let m = ColorMatrix::new(r, cells.to_vec())?;
                    if is_fully_indecomposable(&m) {
                        blocks.push(m);
                    }
                    Ok(())
                })?;
                if blocks.is_empty() {
                    continue;
                }
                for_each_vector(&vec![1; k - r], &vec![u32::MAX; k - r], n - m_sum, &mut |d| {
                    for m in &blocks {
                        let mut a = ColorMatrix::zeros(k)?;
                        for (p, &bi) in block.iter().enumerate() {
                            for (q, &bj) in block.iter().enumerate() {
                                a.set(bi, bj, m.get(p, q));
                            }
                        }
                        for (&i, &v) in rest.iter().zip(d) {
                            a.set(i, i, v);
                        }
                        debug_assert_eq!(classify(&a).verdict, Verdict::Normal);
                        out.push(a)?;
                    }
                    Ok(())
                })?;
            }
        }
    }
    Ok(())
}

/// Sorted `size`-subsets of `0..k` in lexicographic order.
pub(crate) fn index_subsets(k: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            if k - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, k, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, size, &mut Vec::new(), &mut out);
    out
}

/// Calls `f` on every vector `v` with `mins <= v <= maxs` entrywise and
/// `sum(v) == total`, in lexicographic order.
pub(crate) fn for_each_vector(
    mins: &[u32],
    maxs: &[u32],
    total: usize,
    f: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    let len = mins.len();
    let min_sum: usize = mins.iter().map(|&x| x as usize).sum();
    if total < min_sum {
        return Ok(());
    }
    // Largest sum achievable by the suffix starting at each position.
    let mut suffix_max = vec![0usize; len + 1];
    for i in (0..len).rev() {
        suffix_max[i] = suffix_max[i + 1].saturating_add(maxs[i] as usize);
    }
    let mut suffix_min = vec![0usize; len + 1];
    for i in (0..len).rev() {
        suffix_min[i] = suffix_min[i + 1] + mins[i] as usize;
    }
    let mut cur = vec![0u32; len];
    fn rec(
        pos: usize,
        remaining: usize,
        mins: &[u32],
        maxs: &[u32],
        suffix_min: &[usize],
        suffix_max: &[usize],
        cur: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]) -> Result<()>,
    ) -> Result<()> {
        if pos == cur.len() {
            return if remaining == 0 { f(cur) } else { Ok(()) };
        }
        let lo = mins[pos] as usize;
        let hi = (maxs[pos] as usize).min(remaining - suffix_min[pos + 1]);
        for v in lo..=hi {
            if remaining - v > suffix_max[pos + 1] {
                continue;
            }
            cur[pos] = v as u32;
            rec(pos + 1, remaining - v, mins, maxs, suffix_min, suffix_max, cur, f)?;
        }
        Ok(())
    }
    if total > suffix_max[0] {
        return Ok(());
    }
    rec(0, total, mins, maxs, &suffix_min, &suffix_max, &mut cur, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1_000_000;

    #[test]
    fn small_k3_n4() {
        let got = enumerate_desirable(3, 4, &[Family::Small], CAP).unwrap();
        let want: Vec<_> = [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
            .iter()
            .map(|d| ColorMatrix::diagonal(d).unwrap())
            .collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        let mut want_sorted = want;
        want_sorted.sort();
        assert_eq!(got_sorted, want_sorted);
    }

    #[test]
    fn nothing_for_n_zero() {
        assert!(enumerate_desirable(2, 0, &Family::ALL, CAP).unwrap().is_empty());
    }

    #[test]
    fn mininormal_k3_n6() {
        let got = enumerate_desirable(3, 6, &[Family::Mininormal], CAP).unwrap();
        assert_eq!(got.len(), 3);
        for a in &got {
            assert!(crate::matrix::is_mininormal(a));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_desirable(4, 9, &Family::ALL, 10).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    /// Brute force over every k x k matrix with entry sum n.
    fn all_desirable_brute(k: usize, n: usize) -> Vec<ColorMatrix> {
        let mut out = Vec::new();
        for_each_vector(&vec![0; k * k], &vec![u32::MAX; k * k], n, &mut |cells| {
            let a = ColorMatrix::new(k, cells.to_vec()).unwrap();
            if classify(&a).verdict.is_desirable() {
                out.push(a);
            }
            Ok(())
        })
        .unwrap();
        out.sort();
        out
    }

    #[test]
    fn structured_enumeration_matches_brute_force() {
        for k in 1..=3 {
            for n in 0..=6 {
                let mut got = enumerate_desirable(k, n, &Family::ALL, CAP).unwrap();
                got.sort();
                assert_eq!(got, all_desirable_brute(k, n), "k = {k}, n = {n}");
            }
        }
        for n in 0..=6 {
            let mut got = enumerate_desirable(4, n, &Family::ALL, CAP).unwrap();
            got.sort();
            assert_eq!(got, all_desirable_brute(4, n), "k = 4, n = {n}");
        }
    }

    #[test]
    fn vector_enumeration_respects_bounds() {
        let mut seen = Vec::new();
        for_each_vector(&[1, 0], &[2, 3], 3, &mut |v| {
            seen.push(v.to_vec());
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, vec![vec![1, 2], vec![2, 1]]);
    }
}
