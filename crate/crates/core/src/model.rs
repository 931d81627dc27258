//! Hypergraph model: indexed edge families over contiguous vertex ids,
//! partial colorings, and exact integer comparisons against square roots.

use thiserror::Error;

/// Errors raised by [`Hypergraph::build`], vertex-indexed queries, and
/// [`Coloring`] updates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("vertex {vertex} belongs to no edge")]
    IsolatedVertex { vertex: usize },
    #[error("vertex {vertex} appears more than once in edge {edge}")]
    DuplicateVertexInEdge { edge: usize, vertex: usize },
    #[error("color {color} outside palette of size {palette}")]
    ColorOutOfPalette { color: usize, palette: usize },
}

/// An immutable hypergraph over vertex ids `0..vertex_count`.
///
/// Edges form an indexed *family*: two entries with identical vertex sets
/// stay distinct and both count towards vertex degrees. Every edge is
/// nonempty and stored strictly increasing; every vertex belongs to at
/// least one edge. The incidence index (vertex to edge indexes) is built
/// once at construction and never mutated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates an edge family and builds the incidence index.
    ///
    /// Input edge lists may arrive unsorted; they are canonicalized to
    /// strictly increasing order. Rejects empty edges, out-of-range or
    /// duplicated vertex ids, and declared vertices that no edge covers.
    pub fn build(vertex_count: usize, edge_lists: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let mut edges = edge_lists;
        for (e, edge) in edges.iter_mut().enumerate() {
            if edge.is_empty() {
                return Err(ModelError::EmptyEdge { edge: e });
            }
            edge.sort_unstable();
            for pair in edge.windows(2) {
                if pair[0] == pair[1] {
                    return Err(ModelError::DuplicateVertexInEdge {
                        edge: e,
                        vertex: pair[0],
                    });
                }
            }
            let largest = *edge.last().expect("edge checked nonempty");
            if largest >= vertex_count {
                return Err(ModelError::VertexOutOfRange {
                    vertex: largest,
                    vertex_count,
                });
            }
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (e, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(e);
            }
        }
        if let Some(v) = incidence.iter().position(Vec::is_empty) {
            return Err(ModelError::IsolatedVertex { vertex: v });
        }
        Ok(Self {
            vertex_count,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Members of edge `e`, strictly increasing.
    ///
    /// Panics if `e >= edge_count()`.
    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Indexes of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Result<&[usize], ModelError> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v])
    }

    /// Number of family entries containing `v`. Duplicated edge sets count
    /// separately.
    pub fn degree(&self, v: usize) -> Result<usize, ModelError> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    /// Vertices sharing at least one edge with `v`, excluding `v` itself.
    /// Sorted ascending, no duplicates.
    pub fn adjacency(&self, v: usize) -> Result<Vec<usize>, ModelError> {
        self.check_vertex(v)?;
        Ok(self.adjacency_of(v))
    }

    /// Minimum vertex degree; `None` when the hypergraph has no vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.incidence.iter().map(Vec::len).min()
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Per-vertex degrees in vertex-id order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.incidence.iter().map(Vec::len)
    }

    fn check_vertex(&self, v: usize) -> Result<(), ModelError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(ModelError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    // Unchecked accessors for in-crate algorithms that already hold a
    // valid vertex id.
    pub(crate) fn incidence_of(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub(crate) fn degree_of(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub(crate) fn adjacency_of(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incidence[v]
            .iter()
            .flat_map(|&e| self.edges[e].iter().copied())
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A partial or total assignment of palette colors to vertices.
///
/// Assigned colors always stay below `palette_size`; a coloring is *total*
/// once every vertex is assigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<Option<usize>>,
    palette_size: usize,
}

impl Coloring {
    pub fn new(vertex_count: usize, palette_size: usize) -> Self {
        Self {
            assignment: vec![None; vertex_count],
            palette_size,
        }
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn assign(&mut self, v: usize, color: usize) -> Result<(), ModelError> {
        if v >= self.assignment.len() {
            return Err(ModelError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.assignment.len(),
            });
        }
        if color >= self.palette_size {
            return Err(ModelError::ColorOutOfPalette {
                color,
                palette: self.palette_size,
            });
        }
        self.assignment[v] = Some(color);
        Ok(())
    }

    /// `None` when `v` is unassigned or out of range.
    pub fn color(&self, v: usize) -> Option<usize> {
        self.assignment.get(v).copied().flatten()
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn first_unassigned(&self) -> Option<usize> {
        self.assignment.iter().position(Option::is_none)
    }

    pub fn assigned_count(&self) -> usize {
        self.assignment.iter().filter(|c| c.is_some()).count()
    }

    /// Number of distinct colors currently assigned.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette_size];
        for c in self.assignment.iter().flatten() {
            seen[*c] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        self.assignment.iter().copied().enumerate()
    }

    /// Re-reads the same assignment against a different palette size.
    /// Fails if an assigned color would fall outside the new palette.
    pub fn into_palette(self, palette_size: usize) -> Result<Self, ModelError> {
        if let Some(&c) = self.assignment.iter().flatten().find(|&&c| c >= palette_size) {
            return Err(ModelError::ColorOutOfPalette {
                color: c,
                palette: palette_size,
            });
        }
        Ok(Self {
            assignment: self.assignment,
            palette_size,
        })
    }
}

/// Exact integer comparisons against `sqrt(n)`.
///
/// Every predicate works on squared integers in 128-bit arithmetic, so the
/// case splits at perfect squares (`d = sqrt(n)` versus `d > sqrt(n)`) are
/// decided exactly. No floating point anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqrtGate {
    n: usize,
}

impl SqrtGate {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `d >= sqrt(n)`, i.e. `d*d >= n`.
    pub fn ge_sqrt(&self, d: usize) -> bool {
        square(d) >= self.n as u128
    }

    /// `d > sqrt(n)`, i.e. `d*d > n`.
    pub fn gt_sqrt(&self, d: usize) -> bool {
        square(d) > self.n as u128
    }

    /// `d = sqrt(n)` exactly, i.e. `d*d = n`.
    pub fn eq_sqrt(&self, d: usize) -> bool {
        square(d) == self.n as u128
    }

    /// `k` lies in the half-open interval `[2, sqrt(n))`.
    pub fn in_weak_interval(&self, k: usize) -> bool {
        k >= 2 && square(k) < self.n as u128
    }

    /// `k` lies in the closed interval `[2, sqrt(n)]`.
    pub fn in_closed_interval(&self, k: usize) -> bool {
        k >= 2 && square(k) <= self.n as u128
    }

    /// Largest integer `r` with `r*r <= n`.
    pub fn floor_sqrt(&self) -> usize {
        self.n.isqrt()
    }
}

fn square(d: usize) -> u128 {
    let d = d as u128;
    d * d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::build(6, vec![vec![0, 1, 4], vec![1, 2, 5], vec![0, 2, 3]]).unwrap()
    }

    // Re-derives degree and adjacency straight from the raw edge lists,
    // bypassing the incidence index.
    fn naive_degree(edges: &[Vec<usize>], v: usize) -> usize {
        edges.iter().filter(|e| e.contains(&v)).count()
    }

    fn naive_adjacency(edges: &[Vec<usize>], v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = edges
            .iter()
            .filter(|e| e.contains(&v))
            .flat_map(|e| e.iter().copied())
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn build_single_edge() {
        let h = Hypergraph::build(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        for v in 0..3 {
            assert_eq!(h.degree(v).unwrap(), 1);
        }
    }

    #[test]
    fn build_sorts_edges() {
        let h = Hypergraph::build(3, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(h.edge(0), &[0, 1, 2]);
    }

    #[test]
    fn build_rejects_empty_edge() {
        let err = Hypergraph::build(2, vec![vec![0, 1], vec![]]).unwrap_err();
        assert_eq!(err, ModelError::EmptyEdge { edge: 1 });
    }

    #[test]
    fn build_rejects_out_of_range() {
        let err = Hypergraph::build(2, vec![vec![0, 5]]).unwrap_err();
        assert_eq!(
            err,
            ModelError::VertexOutOfRange {
                vertex: 5,
                vertex_count: 2
            }
        );
    }

    #[test]
    fn build_rejects_duplicate_vertex() {
        let err = Hypergraph::build(2, vec![vec![0, 0, 1]]).unwrap_err();
        assert_eq!(err, ModelError::DuplicateVertexInEdge { edge: 0, vertex: 0 });
    }

    #[test]
    fn build_rejects_isolated_vertex() {
        let err = Hypergraph::build(3, vec![vec![0, 1]]).unwrap_err();
        assert_eq!(err, ModelError::IsolatedVertex { vertex: 2 });
    }

    #[test]
    fn singleton_edge_covers_vertex() {
        // A vertex covered only by a singleton edge is not isolated.
        let h = Hypergraph::build(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(h.degree(2).unwrap(), 1);
    }

    #[test]
    fn triangle_shape() {
        let h = triangle();
        assert_eq!(h.edge_count(), 3);
        let degrees: Vec<usize> = h.degrees().collect();
        assert_eq!(degrees, vec![2, 2, 2, 1, 1, 1]);
        assert_eq!(h.adjacency(0).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn queries_match_naive_rescan() {
        let raw = vec![vec![0, 1, 4], vec![1, 2, 5], vec![0, 2, 3], vec![3]];
        let h = Hypergraph::build(6, raw.clone()).unwrap();
        for v in 0..6 {
            assert_eq!(h.degree(v).unwrap(), naive_degree(&raw, v));
            assert_eq!(h.adjacency(v).unwrap(), naive_adjacency(&raw, v));
        }
    }

    #[test]
    fn duplicate_edge_sets_count_separately() {
        let h = Hypergraph::build(1, vec![vec![0], vec![0]]).unwrap();
        assert_eq!(h.degree(0).unwrap(), 2);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn degree_out_of_range() {
        let h = triangle();
        assert!(matches!(
            h.degree(6),
            Err(ModelError::VertexOutOfRange { vertex: 6, .. })
        ));
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(triangle().min_degree(), Some(1));
        let single = Hypergraph::build(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(single.min_degree(), Some(1));
        let empty = Hypergraph::build(0, vec![]).unwrap();
        assert_eq!(empty.min_degree(), None);
    }

    #[test]
    fn handshake_identity() {
        let h = triangle();
        let degree_sum: usize = h.degrees().sum();
        let size_sum: usize = h.edges().iter().map(Vec::len).sum();
        assert_eq!(degree_sum, size_sum);
    }

    #[test]
    fn coloring_palette_enforced() {
        let mut c = Coloring::new(3, 2);
        c.assign(0, 1).unwrap();
        assert_eq!(
            c.assign(1, 2),
            Err(ModelError::ColorOutOfPalette { color: 2, palette: 2 })
        );
        assert_eq!(c.color(0), Some(1));
        assert!(!c.is_total());
        assert_eq!(c.first_unassigned(), Some(1));
    }

    #[test]
    fn coloring_palette_rewrite() {
        let mut c = Coloring::new(2, 2);
        c.assign(0, 1).unwrap();
        c.assign(1, 0).unwrap();
        let widened = c.clone().into_palette(5).unwrap();
        assert_eq!(widened.palette_size(), 5);
        assert_eq!(widened.color(0), Some(1));
        assert!(c.into_palette(1).is_err());
    }

    #[test]
    fn colors_used_counts_distinct() {
        let mut c = Coloring::new(4, 4);
        for (v, col) in [(0, 2), (1, 2), (2, 0), (3, 2)] {
            c.assign(v, col).unwrap();
        }
        assert_eq!(c.colors_used(), 2);
    }

    #[test]
    fn sqrt_gate_exactness() {
        let g = SqrtGate::new(9);
        assert!(g.eq_sqrt(3));
        assert!(g.ge_sqrt(3));
        assert!(!g.gt_sqrt(3));
        assert!(g.gt_sqrt(4));
        assert!(!g.ge_sqrt(2));
        assert!(g.in_weak_interval(2));
        assert!(!g.in_weak_interval(3));
        assert!(g.in_closed_interval(3));
        assert!(!g.in_closed_interval(4));
        assert_eq!(g.floor_sqrt(), 3);
    }

    #[test]
    fn sqrt_gate_non_square() {
        let g = SqrtGate::new(3);
        // No integer squares to 3, so the weak and closed intervals agree.
        assert!(!g.in_weak_interval(2));
        assert!(!g.in_closed_interval(2));
        assert!(!g.eq_sqrt(1));
        assert!(g.ge_sqrt(2));
        assert_eq!(g.floor_sqrt(), 1);
    }

    #[test]
    fn sqrt_gate_consistency_sweep() {
        for n in 0..200usize {
            let g = SqrtGate::new(n);
            for d in 0..40usize {
                if g.eq_sqrt(d) {
                    assert!(g.ge_sqrt(d) && !g.gt_sqrt(d));
                }
                if g.gt_sqrt(d) {
                    assert!(g.ge_sqrt(d));
                }
                if g.in_weak_interval(d) {
                    assert!(g.in_closed_interval(d));
                }
                // Cross-check against the integer square root.
                assert_eq!(g.ge_sqrt(d), d >= n.isqrt() && d * d >= n);
            }
        }
    }
}
