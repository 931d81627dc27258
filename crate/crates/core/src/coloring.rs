//! Constructive coloring algorithms driven by vertex degrees.
//!
//! Three routes produce proper colorings:
//!
//! * [`partition_coloring`] covers extremal instances by partitioning the
//!   vertex set into the non-neighborhoods of one base edge's vertices;
//! * [`greedy_high_degree`] colors hypergraphs of minimum degree at least
//!   `sqrt(n)` by first-fit over a degree-descending order, routing
//!   through the partition when a qualifying vertex exists;
//! * [`efl_coloring`] colors a weakly dense linear `n`-uniform hypergraph
//!   with `n` edges in three phases: the high-degree core via
//!   [`greedy_high_degree`], the mid-band (degrees in `[2, sqrt(n))`) by
//!   first-fit in decreasing degree order, and the remaining degree-1
//!   vertices from each edge's unused colors.
//!
//! The bound helpers return the exact rationals that certify a free color
//! exists at every greedy step; a [`ColoringError::GreedyStall`] is
//! therefore always a defect or hypothesis-violation signal, never an
//! expected outcome.

use std::cmp::Reverse;

use num_rational::Rational64;
use thiserror::Error;

use crate::classify::{
    check_bounded_linear, density_report, linearity_witness, uniformity_witness, DensityClass,
    DensityViolation, PreconditionViolation,
};
use crate::model::{Coloring, Hypergraph, SqrtGate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Precondition(#[from] PreconditionViolation),
    #[error("edge {edge} has {size} vertices, expected {expected}")]
    NotUniform {
        edge: usize,
        size: usize,
        expected: usize,
    },
    #[error("not weakly dense: {} overfull degree class(es)", violations.len())]
    NotWeaklyDense { violations: Vec<DensityViolation> },
    #[error("vertex {vertex} lies in {memberships} partition classes, expected exactly one")]
    PartitionFailure { vertex: usize, memberships: usize },
    #[error("no free color for vertex {vertex}")]
    GreedyStall { vertex: usize },
    #[error("edge index {edge} out of range (edge count {edge_count})")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
}

/// The disjoint vertex classes induced by a base edge: class `i` holds the
/// base edge's `i`-th vertex together with every vertex not adjacent to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClasses {
    pub base_edge: usize,
    /// Class `i` corresponds to the `i`-th (ascending) vertex of the base
    /// edge; members are sorted ascending.
    pub classes: Vec<Vec<usize>>,
}

/// Per-phase diagnostics of the three-phase pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseTrace {
    /// Vertices with `degree^2 >= n`, ascending.
    pub high_degree: Vec<usize>,
    /// Vertices with degree in `[2, sqrt(n))`, ascending.
    pub mid_degree: Vec<usize>,
    /// Vertices of degree 1, ascending.
    pub unit_degree: Vec<usize>,
    /// Distinct colors used by phase 1.
    pub phase1_palette_used: usize,
    /// Phase 2 coloring order: decreasing degree, ties by ascending id.
    pub phase2_order: Vec<usize>,
    /// Exact counting bound recorded per phase-2 step, aligned with
    /// `phase2_order`; always strictly below `n` on valid inputs.
    pub phase2_slack: Vec<Rational64>,
    /// Colored neighbors observed at each phase-2 step, aligned with
    /// `phase2_order`; never exceeds the ceiling of the recorded slack.
    pub phase2_colored_neighbors: Vec<usize>,
    /// Vertices already colored per edge when phase 3 starts.
    pub phase3_edge_precolored: Vec<usize>,
}

/// Sub-hypergraph induced by the vertices of degree at least `sqrt(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighDegreeRestriction {
    pub hypergraph: Hypergraph,
    /// Restriction vertex id to original vertex id, ascending.
    pub vertex_map: Vec<usize>,
}

/// Restricts `h` to its vertices of degree at least `sqrt(n)`. Every
/// nonempty intersection of an edge with the kept vertex set stays a
/// distinct family entry — including repeated sets — so degrees in the
/// restriction equal degrees in `h`. Returns `None` when no vertex
/// qualifies.
pub fn high_degree_restriction(h: &Hypergraph, n: usize) -> Option<HighDegreeRestriction> {
    let gate = SqrtGate::new(n);
    let vertex_map: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| gate.ge_sqrt(h.degree_of(v)))
        .collect();
    if vertex_map.is_empty() {
        return None;
    }
    let mut to_sub = vec![usize::MAX; h.vertex_count()];
    for (sub, &orig) in vertex_map.iter().enumerate() {
        to_sub[orig] = sub;
    }
    let mut edges = Vec::new();
    for edge in h.edges() {
        let sub_edge: Vec<usize> = edge
            .iter()
            .filter(|&&v| to_sub[v] != usize::MAX)
            .map(|&v| to_sub[v])
            .collect();
        if !sub_edge.is_empty() {
            edges.push(sub_edge);
        }
    }
    let hypergraph = Hypergraph::build(vertex_map.len(), edges)
        .expect("every kept vertex keeps at least one incident edge");
    Some(HighDegreeRestriction {
        hypergraph,
        vertex_map,
    })
}

/// Smallest vertex `v` with `degree(v)^2 = n` whose closed neighborhood is
/// fully adjacent (`|adjacency(u)| = n` for every `u` in
/// `adjacency(v) ∪ {v}`). Always absent when `n` is not a perfect square.
pub fn detect_special_vertex(h: &Hypergraph, n: usize) -> Option<usize> {
    let gate = SqrtGate::new(n);
    let adjacency: Vec<Vec<usize>> = (0..h.vertex_count()).map(|v| h.adjacency_of(v)).collect();
    (0..h.vertex_count()).find(|&v| {
        gate.eq_sqrt(h.degree_of(v))
            && adjacency[v].len() == n
            && adjacency[v].iter().all(|&u| adjacency[u].len() == n)
    })
}

/// Partition coloring for extremal instances.
///
/// Builds one class per vertex of `base_edge` (the vertex plus everything
/// not adjacent to it) and colors each class with its index. On an input
/// satisfying the extremal hypotheses the classes partition the vertex
/// set, the coloring is total and proper, and exactly `isqrt(n) + 1`
/// colors are used — the chromatic number of such instances, since every
/// edge has `isqrt(n) + 1` vertices.
pub fn partition_coloring(
    h: &Hypergraph,
    n: usize,
    base_edge: usize,
) -> Result<(Coloring, PartitionClasses), ColoringError> {
    check_bounded_linear(h, n)?;
    if detect_special_vertex(h, n).is_none() {
        return Err(PreconditionViolation::NoQualifyingVertex { n }.into());
    }
    if base_edge >= h.edge_count() {
        return Err(ColoringError::EdgeOutOfRange {
            edge: base_edge,
            edge_count: h.edge_count(),
        });
    }
    let anchors: Vec<usize> = h.edge(base_edge).to_vec();
    let mut memberships = vec![0usize; h.vertex_count()];
    let mut class_of = vec![0usize; h.vertex_count()];
    for (i, &anchor) in anchors.iter().enumerate() {
        let mut adjacent = vec![false; h.vertex_count()];
        for u in h.adjacency_of(anchor) {
            adjacent[u] = true;
        }
        // The anchor is never adjacent to itself, so it lands in class i.
        for u in 0..h.vertex_count() {
            if !adjacent[u] {
                memberships[u] += 1;
                class_of[u] = i;
            }
        }
    }
    if let Some(vertex) = (0..h.vertex_count()).find(|&u| memberships[u] != 1) {
        return Err(ColoringError::PartitionFailure {
            vertex,
            memberships: memberships[vertex],
        });
    }
    let mut classes = vec![Vec::new(); anchors.len()];
    let mut coloring = Coloring::new(h.vertex_count(), anchors.len());
    for u in 0..h.vertex_count() {
        classes[class_of[u]].push(u);
        coloring
            .assign(u, class_of[u])
            .expect("class index stays within the palette");
    }
    Ok((
        coloring,
        PartitionClasses {
            base_edge,
            classes,
        },
    ))
}

/// Colors a linear hypergraph with at most `n` edges of size at most `n`
/// and minimum degree at least `sqrt(n)`, using at most `n` colors.
///
/// When [`detect_special_vertex`] finds a qualifying vertex, delegates to
/// [`partition_coloring`] on its lowest-index incident edge and re-reads
/// the result against palette `n`. Otherwise orders vertices by degree
/// descending, adjacency size descending, id ascending, and first-fit
/// colors them; the counting bounds guarantee a free color at every step.
pub fn greedy_high_degree(h: &Hypergraph, n: usize) -> Result<Coloring, ColoringError> {
    check_bounded_linear(h, n)?;
    if let Some(v) = detect_special_vertex(h, n) {
        let base_edge = h.incidence_of(v)[0];
        let (coloring, _classes) = partition_coloring(h, n, base_edge)?;
        return Ok(coloring
            .into_palette(n)
            .expect("partition palette never exceeds the edge-size limit"));
    }
    let adjacency: Vec<Vec<usize>> = (0..h.vertex_count()).map(|v| h.adjacency_of(v)).collect();
    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
    order.sort_by_key(|&v| (Reverse(h.degree_of(v)), Reverse(adjacency[v].len()), v));
    let mut coloring = Coloring::new(h.vertex_count(), n);
    for &v in &order {
        let color = first_fit(&adjacency[v], &coloring, n)
            .ok_or(ColoringError::GreedyStall { vertex: v })?;
        coloring
            .assign(v, color)
            .expect("first-fit color is within the palette");
    }
    Ok(coloring)
}

/// Colors a weakly dense linear `n`-uniform hypergraph with `n` edges
/// (`n` = edge count) using exactly `n` colors; every edge ends up
/// rainbow. Returns the coloring together with per-phase diagnostics.
pub fn efl_coloring(h: &Hypergraph) -> Result<(Coloring, PhaseTrace), ColoringError> {
    let n = h.edge_count();
    if let Some(edge) = uniformity_witness(h, n) {
        return Err(ColoringError::NotUniform {
            edge,
            size: h.edge(edge).len(),
            expected: n,
        });
    }
    if let Some((edge_a, edge_b)) = linearity_witness(h) {
        return Err(PreconditionViolation::NotLinear { edge_a, edge_b }.into());
    }
    let report = density_report(h, n);
    if report.class == DensityClass::NotWeaklyDense {
        return Err(ColoringError::NotWeaklyDense {
            violations: report.violations,
        });
    }

    let gate = SqrtGate::new(n);
    let mut high_degree = Vec::new();
    let mut mid_degree = Vec::new();
    let mut unit_degree = Vec::new();
    for v in 0..h.vertex_count() {
        let d = h.degree_of(v);
        if gate.ge_sqrt(d) {
            high_degree.push(v);
        } else if d >= 2 {
            mid_degree.push(v);
        } else {
            unit_degree.push(v);
        }
    }

    let mut coloring = Coloring::new(h.vertex_count(), n);

    // Phase 1: color the high-degree core.
    let mut phase1_palette_used = 0;
    if let Some(restriction) = high_degree_restriction(h, n) {
        let sub_coloring = greedy_high_degree(&restriction.hypergraph, n).map_err(|e| match e {
            ColoringError::GreedyStall { vertex } => ColoringError::GreedyStall {
                vertex: restriction.vertex_map[vertex],
            },
            other => other,
        })?;
        phase1_palette_used = sub_coloring.colors_used();
        for (sub_v, &orig_v) in restriction.vertex_map.iter().enumerate() {
            let c = sub_coloring
                .color(sub_v)
                .expect("phase 1 colors its whole vertex set");
            coloring.assign(orig_v, c).expect("same palette size");
        }
    }

    // Phase 2: mid-band vertices by decreasing degree, first-fit.
    let mut phase2_order = mid_degree.clone();
    phase2_order.sort_by_key(|&v| (Reverse(h.degree_of(v)), v));
    let mut phase2_slack = Vec::with_capacity(phase2_order.len());
    let mut phase2_colored_neighbors = Vec::with_capacity(phase2_order.len());
    for &v in &phase2_order {
        let slack = phase2_bound(h, n, v)?;
        let neighbors = h.adjacency_of(v);
        let already_colored = neighbors
            .iter()
            .filter(|&&u| coloring.color(u).is_some())
            .count();
        phase2_slack.push(slack);
        phase2_colored_neighbors.push(already_colored);
        let color =
            first_fit(&neighbors, &coloring, n).ok_or(ColoringError::GreedyStall { vertex: v })?;
        coloring
            .assign(v, color)
            .expect("first-fit color is within the palette");
    }

    // Phase 3: each remaining vertex has degree 1, so its edge's unused
    // colors are free; hand them out ascending id to ascending color.
    let phase3_edge_precolored: Vec<usize> = h
        .edges()
        .iter()
        .map(|edge| edge.iter().filter(|&&u| coloring.color(u).is_some()).count())
        .collect();
    for edge in h.edges() {
        let mut used = vec![false; n];
        for &u in edge {
            if let Some(c) = coloring.color(u) {
                used[c] = true;
            }
        }
        let unused: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        let uncolored: Vec<usize> = edge
            .iter()
            .copied()
            .filter(|&u| coloring.color(u).is_none())
            .collect();
        debug_assert_eq!(unused.len(), uncolored.len());
        for (&u, &c) in uncolored.iter().zip(&unused) {
            coloring.assign(u, c).expect("unused color is within the palette");
        }
    }

    let trace = PhaseTrace {
        high_degree,
        mid_degree,
        unit_degree,
        phase1_palette_used,
        phase2_order,
        phase2_slack,
        phase2_colored_neighbors,
        phase3_edge_precolored,
    };
    Ok((coloring, trace))
}

/// Exact upper bound on the colored neighbors of a mid-band vertex at its
/// phase-2 step: `n - d + i/d`, where `d` is the vertex degree and `i`
/// counts same-degree co-members across its `d` incident edges. Weak
/// density keeps `i < d*d`, hence the bound below `n`.
pub fn phase2_bound(h: &Hypergraph, n: usize, vertex: usize) -> Result<Rational64, ColoringError> {
    if vertex >= h.vertex_count() {
        return Err(PreconditionViolation::VertexOutOfRange {
            vertex,
            vertex_count: h.vertex_count(),
        }
        .into());
    }
    let d = h.degree_of(vertex);
    let gate = SqrtGate::new(n);
    if !gate.in_weak_interval(d) {
        return Err(PreconditionViolation::DegreeOutsideWeakInterval {
            vertex,
            degree: d,
            n,
        }
        .into());
    }
    let mut equal_degree = 0i64;
    for &e in h.incidence_of(vertex) {
        equal_degree += h
            .edge(e)
            .iter()
            .filter(|&&u| u != vertex && h.degree_of(u) == d)
            .count() as i64;
    }
    let d = d as i64;
    Ok(Rational64::new((n as i64 - d) * d + equal_degree, d))
}

/// Exact upper bound on the colored neighbors of a vertex of degree
/// `d > sqrt(n)` under the greedy order: `d * (n - d) / (d - 1)`, always
/// below `n` under the precondition.
pub fn high_degree_colored_bound(n: usize, d: usize) -> Result<Rational64, ColoringError> {
    let gate = SqrtGate::new(n);
    if d < 2 || !gate.gt_sqrt(d) {
        return Err(PreconditionViolation::DegreeNotAboveSqrt { degree: d, n }.into());
    }
    let d = d as i64;
    Ok(Rational64::new(d * (n as i64 - d), d - 1))
}

/// Smallest color in `0..palette` unused among the colored `neighbors`.
fn first_fit(neighbors: &[usize], coloring: &Coloring, palette: usize) -> Option<usize> {
    let mut used = vec![false; palette];
    for &u in neighbors {
        if let Some(c) = coloring.color(u) {
            used[c] = true;
        }
    }
    used.iter().position(|&taken| !taken)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{dual_affine_plane, pencil};
    use crate::oracle::{validate_coloring, Verdict};
    use crate::testkit::{five_degree_two_instance, triangle};

    fn triangle_core() -> Hypergraph {
        Hypergraph::build(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn assert_proper(h: &Hypergraph, coloring: &Coloring) {
        assert!(coloring.is_total());
        assert_eq!(validate_coloring(h, coloring).unwrap(), Verdict::Proper);
    }

    #[test]
    fn special_vertex_examples() {
        assert_eq!(detect_special_vertex(&dual_affine_plane(3).unwrap(), 9), Some(0));
        assert_eq!(detect_special_vertex(&triangle_core(), 3), None);
        assert_eq!(detect_special_vertex(&pencil(4), 4), None);
    }

    #[test]
    fn partition_on_small_plane() {
        let h = dual_affine_plane(2).unwrap();
        let (coloring, classes) = partition_coloring(&h, 4, 0).unwrap();
        assert_proper(&h, &coloring);
        assert_eq!(coloring.palette_size(), 3);
        assert_eq!(coloring.colors_used(), 3);
        assert_eq!(classes.classes, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        let flat: Vec<usize> = (0..6).map(|v| coloring.color(v).unwrap()).collect();
        assert_eq!(flat, vec![0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn partition_every_base_edge() {
        for q in [2usize, 3, 5] {
            let h = dual_affine_plane(q).unwrap();
            let n = q * q;
            for base_edge in 0..h.edge_count() {
                let (coloring, classes) = partition_coloring(&h, n, base_edge).unwrap();
                assert_proper(&h, &coloring);
                assert_eq!(coloring.colors_used(), q + 1, "q={q} base={base_edge}");
                // Classes partition the vertex set.
                let mut seen = vec![false; h.vertex_count()];
                for class in &classes.classes {
                    for &v in class {
                        assert!(!seen[v]);
                        seen[v] = true;
                    }
                }
                assert!(seen.into_iter().all(|s| s));
            }
        }
    }

    #[test]
    fn partition_rejects_non_extremal_input() {
        let err = partition_coloring(&triangle_core(), 3, 0).unwrap_err();
        assert!(matches!(
            err,
            ColoringError::Precondition(PreconditionViolation::NoQualifyingVertex { n: 3 })
        ));
    }

    #[test]
    fn partition_rejects_bad_base_edge() {
        let h = dual_affine_plane(2).unwrap();
        let err = partition_coloring(&h, 4, 9).unwrap_err();
        assert_eq!(err, ColoringError::EdgeOutOfRange { edge: 9, edge_count: 4 });
    }

    #[test]
    fn greedy_triangle_core() {
        let h = triangle_core();
        let coloring = greedy_high_degree(&h, 3).unwrap();
        assert_proper(&h, &coloring);
        // All three vertices are pairwise adjacent; first-fit in id order.
        let flat: Vec<usize> = (0..3).map(|v| coloring.color(v).unwrap()).collect();
        assert_eq!(flat, vec![0, 1, 2]);
    }

    #[test]
    fn greedy_routes_through_partition() {
        let h = dual_affine_plane(3).unwrap();
        let coloring = greedy_high_degree(&h, 9).unwrap();
        assert_proper(&h, &coloring);
        assert_eq!(coloring.palette_size(), 9);
        assert_eq!(coloring.colors_used(), 4);
    }

    #[test]
    fn greedy_single_vertex() {
        let h = Hypergraph::build(1, vec![vec![0]]).unwrap();
        let coloring = greedy_high_degree(&h, 1).unwrap();
        assert_eq!(coloring.color(0), Some(0));
        assert_eq!(coloring.palette_size(), 1);
    }

    #[test]
    fn greedy_rejects_low_degree() {
        let err = greedy_high_degree(&triangle(), 3).unwrap_err();
        assert!(matches!(
            err,
            ColoringError::Precondition(PreconditionViolation::MinDegreeBelowSqrt { .. })
        ));
    }

    #[test]
    fn pipeline_triangle_exact_colors() {
        let h = triangle();
        let (coloring, trace) = efl_coloring(&h).unwrap();
        assert_proper(&h, &coloring);
        let flat: Vec<usize> = (0..6).map(|v| coloring.color(v).unwrap()).collect();
        // Core greedy gives 0,1,2; each edge then owns one leaf taking
        // its single unused color.
        assert_eq!(flat, vec![0, 1, 2, 1, 2, 0]);
        assert_eq!(trace.high_degree, vec![0, 1, 2]);
        assert_eq!(trace.mid_degree, Vec::<usize>::new());
        assert_eq!(trace.unit_degree, vec![3, 4, 5]);
        assert_eq!(trace.phase1_palette_used, 3);
        assert_eq!(trace.phase3_edge_precolored, vec![2, 2, 2]);
    }

    #[test]
    fn pipeline_pencil_exact_colors() {
        let h = pencil(5);
        let (coloring, trace) = efl_coloring(&h).unwrap();
        assert_proper(&h, &coloring);
        let mut expected = vec![0usize];
        for _ in 0..5 {
            expected.extend([1, 2, 3, 4]);
        }
        let flat: Vec<usize> = (0..21).map(|v| coloring.color(v).unwrap()).collect();
        assert_eq!(flat, expected);
        assert_eq!(trace.high_degree, vec![0]);
        assert_eq!(trace.phase1_palette_used, 1);
        assert_eq!(trace.phase3_edge_precolored, vec![1; 5]);
    }

    #[test]
    fn pipeline_degenerate_single_vertex() {
        let h = Hypergraph::build(1, vec![vec![0]]).unwrap();
        let (coloring, trace) = efl_coloring(&h).unwrap();
        assert_eq!(coloring.color(0), Some(0));
        assert_eq!(coloring.palette_size(), 1);
        assert_eq!(trace.high_degree, vec![0]);
    }

    #[test]
    fn pipeline_rejects_nonuniform() {
        let err = efl_coloring(&dual_affine_plane(2).unwrap()).unwrap_err();
        assert!(matches!(err, ColoringError::NotUniform { expected: 4, .. }));
    }

    #[test]
    fn pipeline_rejects_nonlinear() {
        let h = Hypergraph::build(4, vec![vec![0, 1], vec![0, 1], vec![2, 3]]).unwrap();
        // Three edges, so n = 3 and the duplicated pair shares 2 vertices.
        let err = efl_coloring(&h).unwrap_err();
        assert!(matches!(err, ColoringError::NotUniform { .. }));
        // With uniform sizes the linearity check fires instead.
        let h = Hypergraph::build(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let err = efl_coloring(&h).unwrap_err();
        assert!(matches!(
            err,
            ColoringError::Precondition(PreconditionViolation::NotLinear { edge_a: 0, edge_b: 1 })
        ));
    }

    #[test]
    fn pipeline_rejects_overfull_degree_class() {
        // Pad the five-degree-2 skeleton to 9-uniform: linearity and
        // degrees are preserved, so only weak density fails.
        let skeleton = five_degree_two_instance();
        let mut next = skeleton.vertex_count();
        let mut edges = Vec::new();
        for edge in skeleton.edges() {
            let mut padded = edge.clone();
            while padded.len() < 9 {
                padded.push(next);
                next += 1;
            }
            edges.push(padded);
        }
        let h = Hypergraph::build(next, edges).unwrap();
        let err = efl_coloring(&h).unwrap_err();
        match err {
            ColoringError::NotWeaklyDense { violations } => {
                assert_eq!(violations.len(), 1);
                assert_eq!(violations[0].degree, 2);
                assert_eq!(violations[0].witnesses, vec![0, 1, 3, 6, 9]);
            }
            other => panic!("expected NotWeaklyDense, got {other:?}"),
        }
    }

    #[test]
    fn pipeline_is_deterministic() {
        let h = crate::generators::random_linear_uniform(7, crate::generators::Seed(3));
        if let (Ok(a), Ok(b)) = (efl_coloring(&h), efl_coloring(&h)) {
            assert_eq!(a.0, b.0);
            assert_eq!(a.1, b.1);
        }
    }

    #[test]
    fn phase2_bound_values() {
        // Degree 2, no same-degree co-member, n = 9: bound 7.
        let h = Hypergraph::build(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(phase2_bound(&h, 9, 0).unwrap(), Rational64::from_integer(7));

        // Degree 2 with i = 3 (the weak-density maximum 2*2 - 1), n = 9:
        // bound 7 + 3/2 = 17/2.
        let h = Hypergraph::build(
            7,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 5, 6]],
        )
        .unwrap();
        let degree_two: Vec<usize> = (0..7).filter(|&v| h.degree(v).unwrap() == 2).collect();
        assert_eq!(degree_two, vec![0, 1, 2, 3, 5]);
        assert_eq!(phase2_bound(&h, 9, 0).unwrap(), Rational64::new(17, 2));

        // Degree 3 with i = 8 (the k = 3 boundary), n = 16: 13 + 8/3 = 47/3.
        let mut edges = vec![vec![0, 1, 2, 3], vec![0, 4, 5, 6], vec![0, 7, 8, 9]];
        let mut next = 10;
        for v in 1..=8usize {
            edges.push(vec![v, next]);
            edges.push(vec![v, next + 1]);
            next += 2;
        }
        let h = Hypergraph::build(next, edges).unwrap();
        assert_eq!(h.degree(0).unwrap(), 3);
        for v in 1..=8 {
            assert_eq!(h.degree(v).unwrap(), 3);
        }
        assert_eq!(h.degree(9).unwrap(), 1);
        assert_eq!(phase2_bound(&h, 16, 0).unwrap(), Rational64::new(47, 3));
    }

    #[test]
    fn phase2_bound_rejects_out_of_band_degrees() {
        let h = Hypergraph::build(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        // Degree 2 with n = 4 sits at sqrt(n), not below it.
        assert!(matches!(
            phase2_bound(&h, 4, 0),
            Err(ColoringError::Precondition(
                PreconditionViolation::DegreeOutsideWeakInterval { degree: 2, .. }
            ))
        ));
        // Degree 1 is below the band.
        assert!(matches!(
            phase2_bound(&h, 9, 1),
            Err(ColoringError::Precondition(
                PreconditionViolation::DegreeOutsideWeakInterval { degree: 1, .. }
            ))
        ));
        assert!(matches!(
            phase2_bound(&h, 9, 5),
            Err(ColoringError::Precondition(
                PreconditionViolation::VertexOutOfRange { vertex: 5, .. }
            ))
        ));
    }

    #[test]
    fn high_degree_bound_values() {
        assert_eq!(high_degree_colored_bound(9, 4).unwrap(), Rational64::new(20, 3));
        assert_eq!(high_degree_colored_bound(16, 5).unwrap(), Rational64::new(55, 4));
        assert_eq!(high_degree_colored_bound(4, 3).unwrap(), Rational64::new(3, 2));
        assert!(matches!(
            high_degree_colored_bound(9, 3),
            Err(ColoringError::Precondition(
                PreconditionViolation::DegreeNotAboveSqrt { degree: 3, n: 9 }
            ))
        ));
    }

    #[test]
    fn high_degree_bound_stays_below_n() {
        // Exhaustive sweep over the documented parameter box.
        for d in 2usize..=100 {
            for n in 1..(d * d).min(10_001) {
                let bound = high_degree_colored_bound(n, d).unwrap();
                assert!(
                    bound < Rational64::from_integer(n as i64),
                    "d={d} n={n} bound={bound}"
                );
            }
        }
    }

    #[test]
    fn restriction_preserves_degrees() {
        let h = pencil(5);
        let restriction = high_degree_restriction(&h, 5).unwrap();
        assert_eq!(restriction.vertex_map, vec![0]);
        assert_eq!(restriction.hypergraph.edge_count(), 5);
        assert_eq!(restriction.hypergraph.degree(0).unwrap(), 5);
    }

    #[test]
    fn restriction_absent_when_all_degrees_low() {
        // Four disjoint edges of size 4: every degree is 1 < sqrt(4).
        let edges: Vec<Vec<usize>> = (0..4).map(|i| (4 * i..4 * i + 4).collect()).collect();
        let h = Hypergraph::build(16, edges).unwrap();
        assert!(high_degree_restriction(&h, 4).is_none());
        // The pipeline still colors it: every vertex is phase 3.
        let (coloring, trace) = efl_coloring(&h).unwrap();
        assert_proper(&h, &coloring);
        assert_eq!(trace.phase1_palette_used, 0);
        assert_eq!(trace.phase3_edge_precolored, vec![0; 4]);
    }

    #[test]
    fn coloring_errors_display() {
        let err = ColoringError::GreedyStall { vertex: 3 };
        assert_eq!(format!("{err}"), "no free color for vertex 3");
    }
}
