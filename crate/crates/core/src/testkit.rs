//! Shared fixtures for the in-crate unit tests.

use crate::model::Hypergraph;

/// Three size-3 edges arranged in a triangle: pairwise intersecting in
/// one vertex each, with one private degree-1 vertex per edge.
/// Degrees: 2, 2, 2, 1, 1, 1.
pub(crate) fn triangle() -> Hypergraph {
    Hypergraph::build(6, vec![vec![0, 1, 4], vec![1, 2, 5], vec![0, 2, 3]]).unwrap()
}

/// Nine-edge linear instance with exactly five degree-2 vertices
/// (ids 0, 1, 3, 6, 9), so the degree class k = 2 is overfull for n = 9:
/// five vertices exceed k*k = 4.
pub(crate) fn five_degree_two_instance() -> Hypergraph {
    Hypergraph::build(
        13,
        vec![
            vec![0, 1],
            vec![0, 2],
            vec![3, 4],
            vec![3, 5],
            vec![6, 7],
            vec![6, 8],
            vec![9, 10],
            vec![9, 11],
            vec![1, 12],
        ],
    )
    .unwrap()
}
