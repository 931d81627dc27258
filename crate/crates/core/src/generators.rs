//! Deterministic instance builders: dual affine planes, pencils, and
//! seeded random linear uniform hypergraphs.
//!
//! All randomness flows through ChaCha8 (`rand_chacha::ChaCha8Rng`) keyed
//! with [`SeedableRng::seed_from_u64`], and every random choice is made
//! from raw `next_u64` draws as documented on
//! [`random_linear_uniform`]. Identical parameters and seed always
//! reproduce the same instance, byte for byte.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::batch::map_indices;
use crate::classify::{density_report, DensityClass};
use crate::model::Hypergraph;

/// Key for the fixed pseudorandom generator (ChaCha8 via `seed_from_u64`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// Seed used for attempt `index` of a stream rooted at `base`:
/// `base + index` with wrapping addition.
pub fn derived_seed(base: Seed, index: usize) -> Seed {
    Seed(base.0.wrapping_add(index as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{q} is not prime; the plane construction needs a prime order")]
    NotPrime { q: usize },
    #[error("exhausted {attempts} attempts with {found} of {requested} instances found")]
    ExhaustedAttempts {
        attempts: usize,
        found: usize,
        requested: usize,
    },
}

/// Dual of the affine plane of order `q`, for prime `q`.
///
/// Vertices are the `q*q + q` lines of the plane over the integers mod
/// `q`: line `y = m*x + b` gets id `m*q + b`, the vertical `x = c` gets id
/// `q*q + c`. Edges are the `q*q` points in row-major order (`x*q + y`),
/// each containing the `q + 1` lines through that point.
///
/// The output has `q*q` edges of size `q + 1`, every vertex degree `q`,
/// is linear, any two edges share exactly one vertex, and every vertex is
/// adjacent to exactly `q*q` others.
pub fn dual_affine_plane(q: usize) -> Result<Hypergraph, GeneratorError> {
    if !is_prime(q) {
        return Err(GeneratorError::NotPrime { q });
    }
    let vertex_count = q * q + q;
    let mut edges = Vec::with_capacity(q * q);
    for x in 0..q {
        for y in 0..q {
            let mut edge = Vec::with_capacity(q + 1);
            for m in 0..q {
                let b = (y + m * q - (m * x) % q) % q;
                edge.push(m * q + b);
            }
            edge.push(q * q + x);
            edges.push(edge);
        }
    }
    Ok(Hypergraph::build(vertex_count, edges).expect("plane construction is valid"))
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `n` edges through one shared center vertex, each padded to size `n`
/// with fresh degree-1 vertices. The center is vertex 0; edge `i` owns the
/// leaves `1 + i*(n-1) .. 1 + (i+1)*(n-1)`.
///
/// Linear, `n`-uniform, and dense for `n >= 2` (degrees are 1 and `n`).
pub fn pencil(n: usize) -> Hypergraph {
    let vertex_count = if n == 0 { 0 } else { 1 + n * (n - 1) };
    let mut edges = Vec::with_capacity(n);
    for i in 0..n {
        let mut edge = Vec::with_capacity(n);
        edge.push(0);
        let first_leaf = 1 + i * (n - 1);
        edge.extend(first_leaf..first_leaf + (n - 1));
        edges.push(edge);
    }
    Hypergraph::build(vertex_count, edges).expect("pencil construction is valid")
}

/// Probability of attempting vertex reuse for a slot, as eighths: a slot
/// reuses when the low three bits of a `next_u64` draw are below this.
///
/// 1/8 keeps rejection rates of [`weakly_dense_stream`] low while leaving
/// enough mid-band degrees (in `[2, sqrt(n))`) to make the stream
/// interesting; pure fresh-vertex construction would put nearly every
/// vertex at degree 1.
pub const REUSE_EIGHTHS: u64 = 1;

/// Seeded random linear `n`-uniform hypergraph with exactly `n` edges.
///
/// Edges are built sequentially, slot by slot. For each slot one
/// `next_u64` draw decides reuse (low three bits `< REUSE_EIGHTHS`). On
/// reuse, the candidates are the existing vertices that keep the instance
/// linear: not already in the edge under construction, and not lying in
/// any earlier edge that already shares a vertex with it. Among the
/// candidates of maximal current degree, one more `next_u64` draw picks
/// uniformly by ascending vertex id (`draw % count`); concentrating reuse
/// this way biases degrees upward, towards dense-leaning instances. When
/// the coin says fresh or no candidate exists, a brand-new vertex is
/// appended instead, so construction always completes.
pub fn random_linear_uniform(n: usize, seed: Seed) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut incidence: Vec<Vec<usize>> = Vec::new();
    for _ in 0..n {
        let mut chosen: Vec<usize> = Vec::with_capacity(n);
        // Earlier edges already sharing a vertex with the one being built.
        let mut blocked = vec![false; edges.len()];
        for _ in 0..n {
            let reuse = rng.next_u64() & 7 < REUSE_EIGHTHS;
            let mut picked = None;
            if reuse {
                let candidates: Vec<usize> = (0..incidence.len())
                    .filter(|&v| {
                        !incidence[v].is_empty()
                            && !chosen.contains(&v)
                            && incidence[v].iter().all(|&e| !blocked[e])
                    })
                    .collect();
                if let Some(top_degree) = candidates.iter().map(|&v| incidence[v].len()).max() {
                    let top: Vec<usize> = candidates
                        .into_iter()
                        .filter(|&v| incidence[v].len() == top_degree)
                        .collect();
                    picked = Some(top[(rng.next_u64() % top.len() as u64) as usize]);
                }
            }
            let v = picked.unwrap_or_else(|| {
                incidence.push(Vec::new());
                incidence.len() - 1
            });
            for &e in &incidence[v] {
                blocked[e] = true;
            }
            chosen.push(v);
        }
        let edge_index = edges.len();
        for &v in &chosen {
            incidence[v].push(edge_index);
        }
        chosen.sort_unstable();
        edges.push(chosen);
    }
    Hypergraph::build(incidence.len(), edges).expect("construction keeps every vertex covered")
}

/// Instances that survived the weak-density filter, plus the tally of
/// rejected attempts up to and including the one that produced the last
/// survivor.
#[derive(Debug, Clone)]
pub struct StreamOutcome {
    pub instances: Vec<Hypergraph>,
    pub rejected: usize,
    /// Attempt indexes examined: `0..attempts`.
    pub attempts: usize,
}

pub fn default_attempt_budget(count: usize) -> usize {
    count.saturating_mul(100).max(1000)
}

/// Draws from [`random_linear_uniform`] with seeds derived from `seed`
/// (see [`derived_seed`]), keeps instances whose density class is not
/// [`DensityClass::NotWeaklyDense`], and returns the first `count`
/// survivors in attempt order, with the default attempt budget.
pub fn weakly_dense_stream(
    n: usize,
    seed: Seed,
    count: usize,
) -> Result<StreamOutcome, GeneratorError> {
    weakly_dense_stream_with_budget(n, seed, count, default_attempt_budget(count))
}

/// [`weakly_dense_stream`] with an explicit attempt budget. Attempts are
/// evaluated in fixed-size batches (in parallel when the `parallel`
/// feature is on); the outcome is identical to a sequential scan because
/// survivors are taken strictly in attempt-index order.
pub fn weakly_dense_stream_with_budget(
    n: usize,
    seed: Seed,
    count: usize,
    max_attempts: usize,
) -> Result<StreamOutcome, GeneratorError> {
    let mut instances = Vec::with_capacity(count);
    let mut next_attempt = 0;
    let mut attempts = 0;
    while instances.len() < count && next_attempt < max_attempts {
        let chunk = (count - instances.len())
            .max(32)
            .min(max_attempts - next_attempt);
        let survivors = map_indices(next_attempt, next_attempt + chunk, |i| {
            let h = random_linear_uniform(n, derived_seed(seed, i));
            (density_report(&h, n).class != DensityClass::NotWeaklyDense).then_some(h)
        });
        for (offset, survivor) in survivors.into_iter().enumerate() {
            if let Some(h) = survivor {
                instances.push(h);
                if instances.len() == count {
                    attempts = next_attempt + offset + 1;
                    break;
                }
            }
        }
        next_attempt += chunk;
    }
    if instances.len() < count {
        return Err(GeneratorError::ExhaustedAttempts {
            attempts: next_attempt,
            found: instances.len(),
            requested: count,
        });
    }
    let rejected = attempts - count;
    Ok(StreamOutcome {
        instances,
        rejected,
        attempts,
    })
}
