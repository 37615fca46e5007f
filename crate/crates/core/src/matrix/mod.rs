//! `k × k` nonnegative integer matrices and the desirable matrix classes.
//!
//! * **tiny**: diagonal, exactly one entry 2, all others at most 1, at least
//!   two zero diagonal entries;
//! * **small**: diagonal, some entry 2, all entries at most 2, exactly one
//!   zero diagonal entry;
//! * **special**: nonzero diagonal, exactly one off-diagonal entry equal to 1
//!   and all other off-diagonal entries 0;
//! * **normal**: up to a simultaneous permutation of rows and columns,
//!   block diagonal with blocks `M`, `D` where `D` is diagonal with nonzero
//!   diagonal and `M` has nonzero diagonal and is fully indecomposable of
//!   size `r >= 2`.

mod enumerate;
mod indecomposable;
pub mod io;

pub use enumerate::{enumerate_desirable, Family};
pub use indecomposable::{
    fully_indecomposable_by, is_fully_indecomposable, witness_sequence, FiAlgorithm, WitnessSequence,
};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported matrix dimension.
pub const MAX_K: usize = 32;

/// A `k × k` matrix of nonnegative integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorMatrix {
    k: usize,
    entries: Vec<u32>,
}

impl ColorMatrix {
    pub fn new(k: usize, entries: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("matrix dimension must be at least 1".into()));
        }
        if k > MAX_K {
            return Err(Error::ResourceLimit {
                what: "matrix dimension",
                value: k,
                limit: MAX_K,
            });
        }
        if entries.len() != k * k {
            return Err(Error::Precondition(format!(
                "{} entries for a {k}x{k} matrix",
                entries.len()
            )));
        }
        Ok(ColorMatrix { k, entries })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::Precondition("matrix rows must have length k".into()));
        }
        Self::new(k, rows.concat())
    }

    pub fn zeros(k: usize) -> Result<Self> {
        Self::new(k, vec![0; k * k])
    }

    pub fn diagonal(diag: &[u32]) -> Result<Self> {
        let mut a = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            a.set(i, i, d);
        }
        Ok(a)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.k + j] = value;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.k).map(<[u32]>::to_vec).collect()
    }

    /// Sum of all entries, the vertex count of `G(A)`.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|&x| x as usize).sum()
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.k).map(|j| self.get(i, j) as usize).sum()
    }

    pub fn col_sum(&self, j: usize) -> usize {
        (0..self.k).map(|i| self.get(i, j) as usize).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.clone();
        for i in 0..self.k {
            for j in 0..self.k {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal_support().is_empty()
    }

    /// Positions `(i, j)`, `i != j`, holding a nonzero entry.
    pub fn off_diagonal_support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for j in 0..self.k {
                if i != j && self.get(i, j) != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Principal submatrix on the given indices, in the given order.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<Self> {
        let r = idx.len();
        let mut entries = Vec::with_capacity(r * r);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j));
            }
        }
        Self::new(r, entries)
    }

    /// Applies the simultaneous index permutation `i -> perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        for i in 0..self.k {
            for j in 0..self.k {
                out.set(perm[i], perm[j], self.get(i, j));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Tiny,
    Small,
    Special,
    Normal,
    NotDesirable,
}

impl Verdict {
    pub fn is_desirable(self) -> bool {
        self != Verdict::NotDesirable
    }
}

/// Refinement of special matrices by their edge count behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpecialVariant {
    A,
    B,
    C,
    Plain,
    NotApplicable,
}

/// Classification of a matrix with supporting data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixClass {
    pub verdict: Verdict,
    /// First met of (a), (b), (c) for special matrices.
    pub special_variant: SpecialVariant,
    /// Every variant met, in (a), (b), (c) order.
    pub special_tags: Vec<SpecialVariant>,
    /// Indices of the fully indecomposable block of a normal matrix.
    pub normal_block: Option<Vec<usize>>,
    pub normal_block_size: Option<usize>,
    pub mininormal: bool,
    /// (row-sum-balanced, column-sum-balanced)
    pub balance: (bool, bool),
    pub witness: Option<String>,
}

impl MatrixClass {
    /// One-line summary such as `Normal r=3` or `NotDesirable: <reason>`.
    pub fn summary(&self) -> String {
        match self.verdict {
            Verdict::Tiny => "Tiny".into(),
            Verdict::Small => "Small".into(),
            Verdict::Special => match self.special_variant {
                SpecialVariant::Plain => "Special".into(),
                v => format!("Special ({})", variant_letter(v)),
            },
            Verdict::Normal => {
                let r = self.normal_block_size.unwrap_or(0);
                if self.mininormal {
                    format!("Normal r={r} mininormal")
                } else {
                    format!("Normal r={r}")
                }
            }
            Verdict::NotDesirable => format!(
                "NotDesirable: {}",
                self.witness.as_deref().unwrap_or("no clause matched")
            ),
        }
    }
}

fn variant_letter(v: SpecialVariant) -> &'static str {
    match v {
        SpecialVariant::A => "a",
        SpecialVariant::B => "b",
        SpecialVariant::C => "c",
        SpecialVariant::Plain => "plain",
        SpecialVariant::NotApplicable => "n/a",
    }
}

/// Classifies `a` as tiny, small, special, normal or not desirable.
pub fn classify(a: &ColorMatrix) -> MatrixClass {
    let balance = balance_flags(a);
    let mut class = MatrixClass {
        verdict: Verdict::NotDesirable,
        special_variant: SpecialVariant::NotApplicable,
        special_tags: Vec::new(),
        normal_block: None,
        normal_block_size: None,
        mininormal: false,
        balance,
        witness: None,
    };
    let k = a.k();
    let diag: Vec<u32> = (0..k).map(|i| a.get(i, i)).collect();
    let zeros = diag.iter().filter(|&&d| d == 0).count();
    let support = a.off_diagonal_support();

    if support.is_empty() {
        let twos = diag.iter().filter(|&&d| d == 2).count();
        let max = diag.iter().copied().max().unwrap_or(0);
        // With a single entry 2 and max <= 2, all others are at most 1.
        if zeros >= 2 && twos == 1 && max <= 2 {
            class.verdict = Verdict::Tiny;
        } else if zeros == 1 && twos >= 1 && max <= 2 {
            class.verdict = Verdict::Small;
        } else {
            class.witness = Some(match zeros {
                0 => "diagonal matrix without a zero diagonal entry".into(),
                1 => "diagonal matrix with one zero entry needs an entry 2 and all entries at most 2".into(),
                z => format!(
                    "diagonal matrix with {z} zero entries needs exactly one entry 2 and all others at most 1"
                ),
            });
        }
        return class;
    }

    if let Some(i) = diag.iter().position(|&d| d == 0) {
        class.witness = Some(format!(
            "zero diagonal entry at ({i}, {i}) in a non-diagonal matrix"
        ));
        return class;
    }

    if support.len() == 1 {
        let (i, j) = support[0];
        if a.get(i, j) == 1 {
            class.verdict = Verdict::Special;
            class.special_tags = special_tags_unchecked(a, i, j);
            class.special_variant = class
                .special_tags
                .first()
                .copied()
                .unwrap_or(SpecialVariant::Plain);
            return class;
        }
    }

    // The indices touched by off-diagonal support must form the M block:
    // every other index has a zero row and column off the diagonal.
    let block: Vec<usize> = (0..k)
        .filter(|&i| support.iter().any(|&(p, q)| p == i || q == i))
        .collect();
    let m = a
        .principal_submatrix(&block)
        .expect("block of a valid matrix is valid");
    if !is_fully_indecomposable(&m) {
        class.witness = Some(format!(
            "block on indices {block:?} is not fully indecomposable"
        ));
        return class;
    }
    class.verdict = Verdict::Normal;
    class.normal_block_size = Some(block.len());
    class.mininormal = block.len() == 2
        && m.entries().iter().all(|&x| x == 1)
        && balance == (true, true)
        && (2 * k..3 * k).contains(&a.order());
    class.normal_block = Some(block);
    class
}

/// (row-sum-balanced, column-sum-balanced): all row (column) sums differ
/// pairwise by at most one.
pub fn balance_flags(a: &ColorMatrix) -> (bool, bool) {
    let spread = |sums: Vec<usize>| {
        let lo = sums.iter().min().copied().unwrap_or(0);
        let hi = sums.iter().max().copied().unwrap_or(0);
        hi - lo <= 1
    };
    (
        spread((0..a.k()).map(|i| a.row_sum(i)).collect()),
        spread((0..a.k()).map(|j| a.col_sum(j)).collect()),
    )
}

/// Primary variant of a special matrix: the first of (a), (b), (c) it
/// satisfies, or `Plain`.
pub fn special_variant(a: &ColorMatrix) -> Result<SpecialVariant> {
    Ok(special_variant_tags(a)?
        .first()
        .copied()
        .unwrap_or(SpecialVariant::Plain))
}

/// All of (a), (b), (c) satisfied by a special matrix.
pub fn special_variant_tags(a: &ColorMatrix) -> Result<Vec<SpecialVariant>> {
    let class = classify(a);
    if class.verdict != Verdict::Special {
        return Err(Error::Precondition(format!(
            "matrix is not special ({})",
            class.summary()
        )));
    }
    Ok(class.special_tags)
}

/// Special and one of (a), (b), (c).
pub fn is_very_special(a: &ColorMatrix) -> bool {
    let class = classify(a);
    class.verdict == Verdict::Special && !class.special_tags.is_empty()
}

/// Variant tags of a special matrix whose off-diagonal entry sits at `(i, j)`.
///
/// With `alpha = floor(n / k)`:
/// * (a): row-sum-balanced and row `j` sums to `alpha`;
/// * (b): column-sum-balanced and column `i` sums to `alpha`, i.e. the
///   transpose is (a);
/// * (c): `A(i,i) = A(j,j) = alpha - 1`, every other diagonal entry is
///   `alpha` or `alpha + 1`, and at least one is `alpha + 1`.
fn special_tags_unchecked(a: &ColorMatrix, i: usize, j: usize) -> Vec<SpecialVariant> {
    let k = a.k();
    let alpha = a.order() / k;
    let (rows_balanced, cols_balanced) = balance_flags(a);
    let mut tags = Vec::new();
    if rows_balanced && a.row_sum(j) == alpha {
        tags.push(SpecialVariant::A);
    }
    if cols_balanced && a.col_sum(i) == alpha {
        tags.push(SpecialVariant::B);
    }
    let alpha = alpha as u32;
    let others: Vec<u32> = (0..k)
        .filter(|&l| l != i && l != j)
        .map(|l| a.get(l, l))
        .collect();
    if alpha >= 1
        && a.get(i, i) == alpha - 1
        && a.get(j, j) == alpha - 1
        && others.iter().all(|&d| d == alpha || d == alpha + 1)
        && others.contains(&(alpha + 1))
    {
        tags.push(SpecialVariant::C);
    }
    tags
}

/// Normal with `M` the all-ones 2×2 block, balanced, and `2k <= n < 3k`.
pub fn is_mininormal(a: &ColorMatrix) -> bool {
    classify(a).mininormal
}
