//! Coloring machinery for linear hypergraphs.
//!
//! A linear `n`-uniform hypergraph with `n` edges is conjectured
//! (Erdős–Faber–Lovász) to admit a proper coloring with exactly `n`
//! colors. This crate implements the constructive side of that story for
//! the *weakly dense* case — no degree `k` in `[2, sqrt(n))` occurs on
//! more than `k*k` vertices — together with everything needed to check it
//! at desk scale:
//!
//! * [`model`] — the immutable [`Hypergraph`](model::Hypergraph) with its
//!   incidence index, partial [`Coloring`](model::Coloring)s, and exact
//!   integer square-root comparisons ([`SqrtGate`](model::SqrtGate));
//! * [`classify`] — linearity/uniformity predicates, the density classes,
//!   and structural validators for extremal instances;
//! * [`coloring`] — the partition, greedy, and three-phase pipeline
//!   colorings plus their exact counting bounds;
//! * [`oracle`] — independent proper-coloring validation and exact
//!   chromatic number by backtracking;
//! * [`generators`] — dual affine planes, pencils, and seeded random
//!   linear uniform instances;
//! * [`batch`] — data-parallel sweeps over many instances (rayon behind
//!   the default `parallel` feature, with an identical sequential
//!   fallback).

pub mod batch;
pub mod classify;
pub mod coloring;
pub mod generators;
pub mod model;
pub mod oracle;

#[cfg(test)]
pub(crate) mod testkit;

pub use classify::{
    density_report, edge_size_bound_holds, extremal_structure_report, is_dense, is_linear,
    is_slightly_weakly_dense, is_uniform, is_weakly_dense, linearity_witness, uniformity_witness,
    DensityClass, DensityReport, DensityViolation, EdgeSizeBound, ExtremalReport,
    PreconditionViolation,
};
pub use coloring::{
    detect_special_vertex, efl_coloring, greedy_high_degree, high_degree_colored_bound,
    high_degree_restriction, partition_coloring, phase2_bound, ColoringError,
    HighDegreeRestriction, PartitionClasses, PhaseTrace,
};
pub use generators::{
    derived_seed, dual_affine_plane, pencil, random_linear_uniform, weakly_dense_stream,
    weakly_dense_stream_with_budget, GeneratorError, Seed, StreamOutcome,
};
pub use model::{Coloring, Hypergraph, ModelError, SqrtGate};
pub use num_rational::Rational64;
pub use oracle::{
    chromatic_number, chromatic_number_capped, validate_coloring, ChiResult, OracleError, Verdict,
    DEFAULT_VERTEX_CAP,
};
