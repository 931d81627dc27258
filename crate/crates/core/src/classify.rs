//! Structural predicates and density classification.
//!
//! Linearity and uniformity checks, the three density classes (dense,
//! slightly weakly dense, weakly dense), the edge-size bound for linear
//! hypergraphs of minimum degree at least `sqrt(n)`, and the five-point
//! structural report for extremal instances.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::model::{Hypergraph, SqrtGate};

/// A hypothesis check that failed before a validator could run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionViolation {
    #[error("not linear: edges {edge_a} and {edge_b} share at least two vertices")]
    NotLinear { edge_a: usize, edge_b: usize },
    #[error("{edges} edges exceed the limit {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("edge {edge} has {size} vertices, exceeding the limit {limit}")]
    EdgeTooLarge { edge: usize, size: usize, limit: usize },
    #[error("vertex {vertex} has degree {degree}, below sqrt({n})")]
    MinDegreeBelowSqrt { vertex: usize, degree: usize, n: usize },
    #[error("vertex {vertex} has degree {degree}, not exactly sqrt({n})")]
    DegreeNotSqrt { vertex: usize, degree: usize, n: usize },
    #[error("vertex {vertex} has {adjacent} adjacent vertices, expected {n}")]
    AdjacencyNotFull { vertex: usize, adjacent: usize, n: usize },
    #[error("no vertex of sqrt({n}) degree has a fully adjacent neighborhood")]
    NoQualifyingVertex { n: usize },
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("vertex {vertex} has degree {degree}, outside [2, sqrt({n}))")]
    DegreeOutsideWeakInterval { vertex: usize, degree: usize, n: usize },
    #[error("degree {degree} does not exceed sqrt({n})")]
    DegreeNotAboveSqrt { degree: usize, n: usize },
}

/// Density class of a hypergraph with parameter `n`, ordered from the most
/// restrictive class to the least.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityClass {
    /// No vertex degree lies in the closed interval `[2, sqrt(n)]`.
    Dense,
    /// No vertex degree lies in the half-open interval `[2, sqrt(n))`.
    SlightlyWeaklyDense,
    /// Every `k` in `[2, sqrt(n))` is the degree of at most `k*k` vertices.
    WeaklyDense,
    /// Some `k` in `[2, sqrt(n))` is the degree of more than `k*k` vertices.
    NotWeaklyDense,
}

impl fmt::Display for DensityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DensityClass::Dense => "dense",
            DensityClass::SlightlyWeaklyDense => "slightly-weakly-dense",
            DensityClass::WeaklyDense => "weakly-dense",
            DensityClass::NotWeaklyDense => "not-weakly-dense",
        };
        f.write_str(name)
    }
}

/// One overfull degree class: more than `degree * degree` vertices share
/// `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityViolation {
    pub degree: usize,
    /// Every vertex of that degree, ascending.
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub class: DensityClass,
    /// Nonempty exactly when `class` is [`DensityClass::NotWeaklyDense`].
    pub violations: Vec<DensityViolation>,
    pub degree_histogram: BTreeMap<usize, usize>,
}

/// First pair of edge indexes sharing at least two vertices, in
/// lexicographic order; `None` when the hypergraph is linear.
pub fn linearity_witness(h: &Hypergraph) -> Option<(usize, usize)> {
    let edges = h.edges();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if intersection_size(&edges[a], &edges[b]) >= 2 {
                return Some((a, b));
            }
        }
    }
    None
}

/// True iff any two distinct edge entries intersect in at most one vertex.
pub fn is_linear(h: &Hypergraph) -> bool {
    linearity_witness(h).is_none()
}

/// First edge whose size differs from `n`; `None` when `n`-uniform.
pub fn uniformity_witness(h: &Hypergraph, n: usize) -> Option<usize> {
    h.edges().iter().position(|e| e.len() != n)
}

/// True iff every edge has exactly `n` vertices.
pub fn is_uniform(h: &Hypergraph, n: usize) -> bool {
    uniformity_witness(h, n).is_none()
}

/// True iff no vertex degree lies in `[2, sqrt(n)]`; equivalently every
/// degree is 1 or exceeds `sqrt(n)`.
pub fn is_dense(h: &Hypergraph, n: usize) -> bool {
    let gate = SqrtGate::new(n);
    h.degrees().all(|d| !gate.in_closed_interval(d))
}

/// True iff no vertex degree lies in `[2, sqrt(n))`.
pub fn is_slightly_weakly_dense(h: &Hypergraph, n: usize) -> bool {
    let gate = SqrtGate::new(n);
    h.degrees().all(|d| !gate.in_weak_interval(d))
}

/// True iff every `k` in `[2, sqrt(n))` is the degree of at most `k*k`
/// vertices.
pub fn is_weakly_dense(h: &Hypergraph, n: usize) -> bool {
    let gate = SqrtGate::new(n);
    degree_histogram(h)
        .iter()
        .all(|(&k, &count)| !gate.in_weak_interval(k) || count <= k * k)
}

fn degree_histogram(h: &Hypergraph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for d in h.degrees() {
        *hist.entry(d).or_insert(0) += 1;
    }
    hist
}

/// Classifies `h` against the density parameter `n` and reports every
/// overfull degree class with its witness vertices.
///
/// `n` is passed explicitly rather than read from the edge count: the
/// classifier also runs on sub-hypergraphs that inherit `n` from their
/// parent instance.
pub fn density_report(h: &Hypergraph, n: usize) -> DensityReport {
    let gate = SqrtGate::new(n);
    let degree_histogram = degree_histogram(h);
    let mut dense = true;
    let mut slightly = true;
    let mut weakly = true;
    let mut violations = Vec::new();
    for (&k, &count) in &degree_histogram {
        if gate.in_closed_interval(k) {
            dense = false;
        }
        if gate.in_weak_interval(k) {
            slightly = false;
            if count > k * k {
                weakly = false;
                let witnesses = (0..h.vertex_count())
                    .filter(|&v| h.degree_of(v) == k)
                    .collect();
                violations.push(DensityViolation {
                    degree: k,
                    witnesses,
                });
            }
        }
    }
    let class = if dense {
        DensityClass::Dense
    } else if slightly {
        DensityClass::SlightlyWeaklyDense
    } else if weakly {
        DensityClass::WeaklyDense
    } else {
        DensityClass::NotWeaklyDense
    };
    DensityReport {
        class,
        violations,
        degree_histogram,
    }
}

/// Outcome of the edge-size bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSizeBound {
    pub holds: bool,
    /// First edge breaking the bound, when `holds` is false.
    pub witness_edge: Option<usize>,
}

/// Checks the edge-size bound for a linear hypergraph with at most `n`
/// edges of size at most `n` and minimum degree at least `sqrt(n)`: every
/// edge size `s` satisfies `(s-1)^2 <= n`, and strictly `(s-1)^2 < n` for
/// edges containing a vertex of degree exceeding `sqrt(n)`.
pub fn edge_size_bound_holds(
    h: &Hypergraph,
    n: usize,
) -> Result<EdgeSizeBound, PreconditionViolation> {
    check_bounded_linear(h, n)?;
    for (e, edge) in h.edges().iter().enumerate() {
        let s = edge.len();
        let shifted = (s - 1) as u128 * (s - 1) as u128;
        if shifted > n as u128 {
            return Ok(EdgeSizeBound {
                holds: false,
                witness_edge: Some(e),
            });
        }
        let gate = SqrtGate::new(n);
        let has_high_degree = edge.iter().any(|&v| gate.gt_sqrt(h.degree_of(v)));
        if has_high_degree && shifted >= n as u128 {
            return Ok(EdgeSizeBound {
                holds: false,
                witness_edge: Some(e),
            });
        }
    }
    Ok(EdgeSizeBound {
        holds: true,
        witness_edge: None,
    })
}

/// The five structural conclusions that hold for an extremal instance:
/// a linear hypergraph with at most `n` edges of size at most `n`, minimum
/// degree at least `sqrt(n)`, and a vertex of degree exactly `sqrt(n)`
/// whose closed neighborhood is fully adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    /// (i) the edge count is exactly `n`.
    pub edge_count_is_n: bool,
    /// (ii) every edge has exactly `sqrt(n) + 1` vertices.
    pub edge_sizes_are_root_plus_one: bool,
    /// (iii) every vertex has degree exactly `sqrt(n)`.
    pub degrees_are_root: bool,
    /// (iv) every pair of distinct edges shares exactly one vertex.
    pub pairwise_intersections_exactly_one: bool,
    /// (v) for every edge `E` and vertex `u` outside `E`, exactly one
    /// vertex of `E` is not adjacent to `u`.
    pub unique_nonneighbor_per_outside_vertex: bool,
    /// Human-readable witness for the first failing conclusion.
    pub first_failure: Option<String>,
}

impl ExtremalReport {
    pub fn all_hold(&self) -> bool {
        self.edge_count_is_n
            && self.edge_sizes_are_root_plus_one
            && self.degrees_are_root
            && self.pairwise_intersections_exactly_one
            && self.unique_nonneighbor_per_outside_vertex
    }
}

/// Exhaustively evaluates the five extremal conclusions around the
/// qualifying vertex `v`. On a hypothesis-satisfying input all five flags
/// come back true; any false flag is a defect witness.
pub fn extremal_structure_report(
    h: &Hypergraph,
    n: usize,
    v: usize,
) -> Result<ExtremalReport, PreconditionViolation> {
    check_bounded_linear(h, n)?;
    if v >= h.vertex_count() {
        return Err(PreconditionViolation::VertexOutOfRange {
            vertex: v,
            vertex_count: h.vertex_count(),
        });
    }
    let gate = SqrtGate::new(n);
    let d = h.degree_of(v);
    if !gate.eq_sqrt(d) {
        return Err(PreconditionViolation::DegreeNotSqrt {
            vertex: v,
            degree: d,
            n,
        });
    }
    let mut closed_neighborhood = h.adjacency_of(v);
    closed_neighborhood.push(v);
    for &u in &closed_neighborhood {
        let adjacent = h.adjacency_of(u).len();
        if adjacent != n {
            return Err(PreconditionViolation::AdjacencyNotFull {
                vertex: u,
                adjacent,
                n,
            });
        }
    }

    let root = gate.floor_sqrt();
    let mut first_failure = None;
    let mut note = |failure: Option<String>| {
        if first_failure.is_none() {
            first_failure = failure;
        }
    };

    let edge_count_is_n = h.edge_count() == n;
    if !edge_count_is_n {
        note(Some(format!("edge count {} differs from {n}", h.edge_count())));
    }

    let bad_size = h.edges().iter().position(|e| e.len() != root + 1);
    let edge_sizes_are_root_plus_one = bad_size.is_none();
    if let Some(e) = bad_size {
        note(Some(format!(
            "edge {e} has {} vertices, expected {}",
            h.edge(e).len(),
            root + 1
        )));
    }

    let bad_degree = (0..h.vertex_count()).find(|&u| h.degree_of(u) != root);
    let degrees_are_root = bad_degree.is_none();
    if let Some(u) = bad_degree {
        note(Some(format!(
            "vertex {u} has degree {}, expected {root}",
            h.degree_of(u)
        )));
    }

    let mut bad_pair = None;
    'pairs: for a in 0..h.edge_count() {
        for b in a + 1..h.edge_count() {
            let shared = intersection_size(h.edge(a), h.edge(b));
            if shared != 1 {
                bad_pair = Some((a, b, shared));
                break 'pairs;
            }
        }
    }
    let pairwise_intersections_exactly_one = bad_pair.is_none();
    if let Some((a, b, shared)) = bad_pair {
        note(Some(format!("edges {a} and {b} share {shared} vertices")));
    }

    // Adjacency lists computed once; membership by binary search.
    let adjacency: Vec<Vec<usize>> = (0..h.vertex_count()).map(|u| h.adjacency_of(u)).collect();
    let mut bad_outside = None;
    'outside: for (e, edge) in h.edges().iter().enumerate() {
        for (u, adjacent_to_u) in adjacency.iter().enumerate() {
            if edge.binary_search(&u).is_ok() {
                continue;
            }
            let nonneighbors = edge
                .iter()
                .filter(|&&w| adjacent_to_u.binary_search(&w).is_err())
                .count();
            if nonneighbors != 1 {
                bad_outside = Some((e, u, nonneighbors));
                break 'outside;
            }
        }
    }
    let unique_nonneighbor_per_outside_vertex = bad_outside.is_none();
    if let Some((e, u, count)) = bad_outside {
        note(Some(format!(
            "vertex {u} outside edge {e} has {count} non-neighbors in it, expected 1"
        )));
    }

    Ok(ExtremalReport {
        edge_count_is_n,
        edge_sizes_are_root_plus_one,
        degrees_are_root,
        pairwise_intersections_exactly_one,
        unique_nonneighbor_per_outside_vertex,
        first_failure,
    })
}

/// Shared hypothesis check: linear, at most `n` edges, each of size at
/// most `n`, and minimum degree at least `sqrt(n)`.
pub(crate) fn check_bounded_linear(
    h: &Hypergraph,
    n: usize,
) -> Result<(), PreconditionViolation> {
    if let Some((edge_a, edge_b)) = linearity_witness(h) {
        return Err(PreconditionViolation::NotLinear { edge_a, edge_b });
    }
    if h.edge_count() > n {
        return Err(PreconditionViolation::TooManyEdges {
            edges: h.edge_count(),
            limit: n,
        });
    }
    if let Some(edge) = h.edges().iter().position(|e| e.len() > n) {
        return Err(PreconditionViolation::EdgeTooLarge {
            edge,
            size: h.edge(edge).len(),
            limit: n,
        });
    }
    let gate = SqrtGate::new(n);
    for v in 0..h.vertex_count() {
        let degree = h.degree_of(v);
        if !gate.ge_sqrt(degree) {
            return Err(PreconditionViolation::MinDegreeBelowSqrt { vertex: v, degree, n });
        }
    }
    Ok(())
}

pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut shared = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                shared += 1;
                i += 1;
                j += 1;
            }
        }
    }
    shared
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{dual_affine_plane, pencil};
    use crate::testkit::{five_degree_two_instance, triangle};

    #[test]
    fn linearity_examples() {
        let single = Hypergraph::build(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(is_linear(&single));
        let overlapping =
            Hypergraph::build(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(linearity_witness(&overlapping), Some((0, 1)));
        assert!(is_linear(&dual_affine_plane(3).unwrap()));
    }

    #[test]
    fn uniformity_examples() {
        let single = Hypergraph::build(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(is_uniform(&single, 3));
        assert!(!is_uniform(&dual_affine_plane(3).unwrap(), 9));
        assert!(is_uniform(&pencil(4), 4));
    }

    #[test]
    fn density_pencil_is_dense() {
        let report = density_report(&pencil(4), 4);
        assert_eq!(report.class, DensityClass::Dense);
        assert!(report.violations.is_empty());
        assert_eq!(report.degree_histogram.get(&4), Some(&1));
        assert_eq!(report.degree_histogram.get(&1), Some(&12));
    }

    #[test]
    fn density_triangle_is_dense() {
        // Degrees 2,2,2,1,1,1 against n = 3: both intervals [2, sqrt 3)
        // and [2, sqrt 3] contain no integer.
        let report = density_report(&triangle(), 3);
        assert_eq!(report.class, DensityClass::Dense);
    }

    #[test]
    fn density_violation_witnesses() {
        let h = five_degree_two_instance();
        let report = density_report(&h, 9);
        assert_eq!(report.class, DensityClass::NotWeaklyDense);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].degree, 2);
        assert_eq!(report.violations[0].witnesses, vec![0, 1, 3, 6, 9]);
    }

    #[test]
    fn violations_match_histogram_recount() {
        let h = five_degree_two_instance();
        let report = density_report(&h, 9);
        // Independent recount straight from the degree sequence.
        for violation in &report.violations {
            let recount: Vec<usize> = (0..h.vertex_count())
                .filter(|&v| h.degree(v).unwrap() == violation.degree)
                .collect();
            assert_eq!(violation.witnesses, recount);
            assert!(recount.len() > violation.degree * violation.degree);
        }
    }

    #[test]
    fn slightly_weakly_dense_at_exact_root() {
        // Degrees exactly sqrt(n) land in [2, sqrt n] but not [2, sqrt n).
        let h = dual_affine_plane(2).unwrap();
        let report = density_report(&h, 4);
        assert_eq!(report.class, DensityClass::SlightlyWeaklyDense);
        assert!(!is_dense(&h, 4));
        assert!(is_slightly_weakly_dense(&h, 4));
        assert!(is_weakly_dense(&h, 4));
    }

    #[test]
    fn inclusion_chain_on_examples() {
        let instances = vec![
            (triangle(), 3),
            (pencil(4), 4),
            (pencil(7), 7),
            (dual_affine_plane(2).unwrap(), 4),
            (dual_affine_plane(3).unwrap(), 9),
            (five_degree_two_instance(), 9),
        ];
        for (h, n) in &instances {
            if is_dense(h, *n) {
                assert!(is_slightly_weakly_dense(h, *n));
            }
            if is_slightly_weakly_dense(h, *n) {
                assert!(is_weakly_dense(h, *n));
            }
            let report = density_report(h, *n);
            assert_eq!(
                report.violations.is_empty(),
                report.class != DensityClass::NotWeaklyDense
            );
        }
    }

    #[test]
    fn edge_size_bound_on_planes() {
        for q in [2usize, 3, 5, 7] {
            let bound = edge_size_bound_holds(&dual_affine_plane(q).unwrap(), q * q).unwrap();
            assert!(bound.holds, "q={q}");
            assert_eq!(bound.witness_edge, None);
        }
    }

    #[test]
    fn edge_size_bound_on_triangle_core() {
        // Edges {a,b},{b,c},{a,c}: size 2, (2-1)^2 = 1 <= 3, min degree 2.
        let core = Hypergraph::build(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let bound = edge_size_bound_holds(&core, 3).unwrap();
        assert!(bound.holds);
    }

    #[test]
    fn edge_size_bound_reports_bad_hypothesis() {
        // Triangle has leaf vertices of degree 1, below sqrt(3).
        let err = edge_size_bound_holds(&triangle(), 3).unwrap_err();
        assert!(matches!(
            err,
            PreconditionViolation::MinDegreeBelowSqrt { degree: 1, .. }
        ));
    }

    #[test]
    fn edge_size_bound_linearity_checked_first() {
        // Edge 0 meets edge 1 in two vertices, so the hypothesis check
        // fires before any size scan. A failing bound under satisfied
        // hypotheses cannot be constructed: the bound is a theorem, and
        // the failure branch exists to flag defects, not inputs.
        let h = Hypergraph::build(
            4,
            vec![vec![0, 1, 2, 3], vec![0, 1], vec![0, 2], vec![0, 3]],
        )
        .unwrap();
        let err = edge_size_bound_holds(&h, 4);
        assert!(matches!(err, Err(PreconditionViolation::NotLinear { .. })));
    }

    #[test]
    fn extremal_report_on_planes() {
        for (q, v) in [(2usize, 0usize), (3, 0), (3, 5), (5, 0)] {
            let h = dual_affine_plane(q).unwrap();
            let report = extremal_structure_report(&h, q * q, v).unwrap();
            assert!(report.all_hold(), "q={q} v={v}: {:?}", report.first_failure);
            assert!(report.first_failure.is_none());
        }
    }

    #[test]
    fn extremal_report_rejects_wrong_degree() {
        let h = dual_affine_plane(3).unwrap();
        // n = 10 makes degree 3 no longer the exact square root.
        let err = extremal_structure_report(&h, 10, 0);
        assert!(matches!(
            err,
            Err(PreconditionViolation::MinDegreeBelowSqrt { .. })
                | Err(PreconditionViolation::DegreeNotSqrt { .. })
        ));
    }

    #[test]
    fn intersection_size_merges() {
        assert_eq!(intersection_size(&[0, 2, 4], &[1, 2, 3, 4]), 2);
        assert_eq!(intersection_size(&[], &[1]), 0);
        assert_eq!(intersection_size(&[5], &[5]), 1);
    }
}
