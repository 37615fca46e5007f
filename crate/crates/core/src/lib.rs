//! Maximal ambiguously k-colorable graphs.
//!
//! A graph is *ambiguously k-colorable* when its vertex set has at least two
//! distinct partitions into at most `k` anticliques, and *maximal* when adding
//! any missing edge leaves at most one such partition. These graphs are
//! exactly the graphs `G(A)` built from *desirable* `k × k` matrices `A`.
//!
//! The crate provides:
//!
//! * [`matrix`]: the [`ColorMatrix`] certificate type, its classification into
//!   tiny / small / special / normal classes, full indecomposability and the
//!   walk witnesses used by the sufficiency argument;
//! * [`graph`]: bit-row simple graphs, `G(A)`, standard constructions,
//!   canonical labeling and exhaustive generation of small graphs;
//! * [`coloring`]: exhaustive enumeration of k-colorings as set partitions;
//! * [`maximality`]: maximality checks, matrix reconstruction and the
//!   exhaustive characterization harness;
//! * [`extremal`]: maximum edge counts of ambiguously k-colorable graphs and
//!   their extremal graphs;
//! * [`perfection`]: perfectness checks;
//! * [`dfold`]: graphs with `d` distinct colorings, built from tensors.
//!
//! Indices are 0-based throughout the API.

pub mod coloring;
pub mod dfold;
mod error;
pub mod extremal;
pub mod graph;
pub mod matching;
pub mod matrix;
pub mod maximality;
pub mod perfection;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::{CanonicalCert, SimpleGraph};
pub use matrix::{ColorMatrix, MatrixClass, Verdict};

/// Size guards shared by the exhaustive routines.
///
/// Every guard produces [`Error::ResourceLimit`] when exceeded; nothing is
/// silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by `build_graph` (bit rows cap this at 64).
    pub max_graph_n: usize,
    /// Largest vertex count accepted by canonical labeling.
    pub canon_max_n: usize,
    /// Largest vertex count for exhaustive enumeration of all graphs.
    pub exhaustive_max_n: usize,
    /// Largest block size for subset-based full indecomposability.
    pub fi_subset_max: usize,
    /// Largest vertex count for the induced-subgraph perfectness check.
    pub perfect_max_n: usize,
    /// Largest number of matrices an enumeration may produce.
    pub enumeration_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_graph_n: 64,
            canon_max_n: 16,
            exhaustive_max_n: 7,
            fi_subset_max: 20,
            perfect_max_n: 14,
            enumeration_cap: 5_000_000,
        }
    }
}

impl Limits {
    /// Default limits with exhaustive graph enumeration raised to 8 vertices.
    pub fn with_n8() -> Self {
        Limits {
            exhaustive_max_n: 8,
            ..Limits::default()
        }
    }
}

/// Runs `f` inside a dedicated rayon pool with `jobs` worker threads.
pub(crate) fn in_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
