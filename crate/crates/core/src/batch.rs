//! Batch helpers over independent instances.
//!
//! With the `parallel` feature (on by default) these fan out across a
//! rayon thread pool; without it they run sequentially. Results are
//! collected in input order either way, so outputs are identical across
//! both configurations. The `_seq` variants always run sequentially and
//! exist so the two code paths can be compared side by side (see the
//! `parallel` bench).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::coloring::{efl_coloring, ColoringError, PhaseTrace};
use crate::generators::{derived_seed, random_linear_uniform, Seed};
use crate::model::{Coloring, Hypergraph};

/// Maps `f` over `start..end`, preserving index order in the output.
#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(start: usize, end: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (start..end).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(start: usize, end: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (start..end).map(f).collect()
}

/// Runs the full coloring pipeline over each instance. Output order
/// matches input order.
pub fn efl_color_many(
    instances: &[Hypergraph],
) -> Vec<Result<(Coloring, PhaseTrace), ColoringError>> {
    #[cfg(feature = "parallel")]
    {
        instances.par_iter().map(efl_coloring).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        efl_color_many_seq(instances)
    }
}

/// Sequential twin of [`efl_color_many`].
pub fn efl_color_many_seq(
    instances: &[Hypergraph],
) -> Vec<Result<(Coloring, PhaseTrace), ColoringError>> {
    instances.iter().map(efl_coloring).collect()
}

/// Generates `count` instances from seeds `derived_seed(base, 0..count)`.
/// Output order is fixed by index regardless of scheduling.
pub fn generate_many(n: usize, base: Seed, count: usize) -> Vec<Hypergraph> {
    map_indices(0, count, |i| random_linear_uniform(n, derived_seed(base, i)))
}

/// Sequential twin of [`generate_many`].
pub fn generate_many_seq(n: usize, base: Seed, count: usize) -> Vec<Hypergraph> {
    (0..count)
        .map(|i| random_linear_uniform(n, derived_seed(base, i)))
        .collect()
}
