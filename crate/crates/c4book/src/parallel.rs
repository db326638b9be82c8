//! Rayon-backed work splitting. Results are merged in input order, so output
//! never depends on the number of workers.

use c4book_core::deletion::DeletionBase;
use c4book_core::search::{canonical_children, Expander, SmallGraph};
use rayon::prelude::*;

/// Expands each parent of a batch on its own worker.
#[derive(Clone, Copy, Debug, Default)]
pub struct Parallel;

impl Expander for Parallel {
    fn expand(&self, parents: &[SmallGraph], target: usize, min_degree: usize) -> Vec<Vec<(u128, SmallGraph)>> {
        parents
            .par_iter()
            .map(|p| canonical_children(p, target, min_degree))
            .collect()
    }
}

/// Seeds among `seeds` whose deletion leaves a vertex of degree below `m`.
pub fn failing_seeds(base: &DeletionBase, seeds: std::ops::Range<u64>) -> Vec<u64> {
    let mut out: Vec<u64> = seeds.into_par_iter().filter(|&s| !base.succeeds(s)).collect();
    out.sort_unstable();
    out
}
