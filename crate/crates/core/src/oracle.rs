//! Ground truth: proper-coloring validation and exact chromatic number by
//! exhaustive backtracking at desk scale.

use std::cmp::Reverse;

use thiserror::Error;

use crate::model::{Coloring, Hypergraph};

/// Default vertex cap for the exact search. Overridable per call through
/// [`chromatic_number_capped`].
pub const DEFAULT_VERTEX_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex {vertex} is uncolored; the check needs a total coloring")]
    PartialColoring { vertex: usize },
    #[error("coloring covers {coloring_vertices} vertices, hypergraph has {hypergraph_vertices}")]
    SizeMismatch {
        coloring_vertices: usize,
        hypergraph_vertices: usize,
    },
    #[error("{vertex_count} vertices exceed the search cap {cap}")]
    TooLarge { vertex_count: usize, cap: usize },
    #[error("no proper coloring within {max_colors} colors")]
    NoColoringWithinLimit { max_colors: usize },
}

/// Outcome of [`validate_coloring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    /// First edge found containing two equal-colored vertices `u < v`.
    Improper { edge: usize, u: usize, v: usize },
}

impl Verdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, Verdict::Proper)
    }
}

/// Checks a total coloring edge by edge: no edge may contain two distinct
/// vertices of equal color. Scans edges in index order and vertex pairs in
/// ascending order, so the reported witness is deterministic.
pub fn validate_coloring(h: &Hypergraph, coloring: &Coloring) -> Result<Verdict, OracleError> {
    if coloring.vertex_count() != h.vertex_count() {
        return Err(OracleError::SizeMismatch {
            coloring_vertices: coloring.vertex_count(),
            hypergraph_vertices: h.vertex_count(),
        });
    }
    if let Some(vertex) = coloring.first_unassigned() {
        return Err(OracleError::PartialColoring { vertex });
    }
    for (e, edge) in h.edges().iter().enumerate() {
        for i in 0..edge.len() {
            for j in i + 1..edge.len() {
                if coloring.color(edge[i]) == coloring.color(edge[j]) {
                    return Ok(Verdict::Improper {
                        edge: e,
                        u: edge[i],
                        v: edge[j],
                    });
                }
            }
        }
    }
    Ok(Verdict::Proper)
}

/// Exact chromatic number with a proper witness coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: usize,
    pub witness: Coloring,
    /// Color assignments attempted during the search.
    pub nodes_explored: u64,
}

/// Exact chromatic number by backtracking, with the default vertex cap.
pub fn chromatic_number(h: &Hypergraph, max_colors: usize) -> Result<ChiResult, OracleError> {
    chromatic_number_capped(h, max_colors, DEFAULT_VERTEX_CAP)
}

/// Exact chromatic number by backtracking over at most `cap` vertices.
///
/// Searches palette sizes upward from the max edge size (a valid lower
/// bound: an edge's vertices are pairwise adjacent). Vertices are tried in
/// descending degree order, and a vertex may only use a color at most one
/// above the largest color used so far, which prunes color permutations.
pub fn chromatic_number_capped(
    h: &Hypergraph,
    max_colors: usize,
    cap: usize,
) -> Result<ChiResult, OracleError> {
    if h.vertex_count() > cap {
        return Err(OracleError::TooLarge {
            vertex_count: h.vertex_count(),
            cap,
        });
    }
    if h.vertex_count() == 0 {
        return Ok(ChiResult {
            chi: 0,
            witness: Coloring::new(0, 0),
            nodes_explored: 0,
        });
    }

    let neighbors: Vec<Vec<usize>> = (0..h.vertex_count()).map(|v| h.adjacency_of(v)).collect();
    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
    order.sort_by_key(|&v| (Reverse(h.degree_of(v)), v));

    let lower_bound = h.max_edge_size().max(1);
    let mut nodes_explored = 0u64;
    for k in lower_bound..=max_colors {
        let mut colors = vec![usize::MAX; h.vertex_count()];
        if search(&order, &neighbors, k, 0, 0, &mut colors, &mut nodes_explored) {
            let mut witness = Coloring::new(h.vertex_count(), k);
            for (v, &c) in colors.iter().enumerate() {
                witness.assign(v, c).expect("search colors stay below k");
            }
            return Ok(ChiResult {
                chi: k,
                witness,
                nodes_explored,
            });
        }
    }
    Err(OracleError::NoColoringWithinLimit { max_colors })
}

fn search(
    order: &[usize],
    neighbors: &[Vec<usize>],
    palette: usize,
    position: usize,
    used_colors: usize,
    colors: &mut [usize],
    nodes: &mut u64,
) -> bool {
    if position == order.len() {
        return true;
    }
    let v = order[position];
    // Symmetry breaking: allow at most one brand-new color.
    let limit = (used_colors + 1).min(palette);
    'colors: for c in 0..limit {
        *nodes += 1;
        for &u in &neighbors[v] {
            if colors[u] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        let next_used = used_colors.max(c + 1);
        if search(order, neighbors, palette, position + 1, next_used, colors, nodes) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
