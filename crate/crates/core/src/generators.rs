//! Synthetic graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("crown graph needs at least 2 pairs, got {0}")]
    CrownTooSmall(usize),
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("graph needs at least one vertex")]
    NoVertices,
}

/// Crown graph on `2 * pairs` vertices: K(pairs, pairs) minus a perfect
/// matching. Part U is `0..pairs`, part V is `pairs..2*pairs`, and `i` is
/// adjacent to `pairs + j` iff `i != j`.
pub fn crown_graph(pairs: usize) -> Result<Graph, GeneratorError> {
    if pairs < 2 {
        return Err(GeneratorError::CrownTooSmall(pairs));
    }
    let edges = (0..pairs).flat_map(|i| {
        (0..pairs)
            .filter(move |&j| j != i)
            .map(move |j| (i, pairs + j))
    });
    Ok(Graph::from_edges(2 * pairs, edges).expect("crown edges are in range"))
}

/// Erdős–Rényi G(n, p) from a ChaCha8 stream seeded with `seed`.
///
/// Pairs are visited in `(u, v), u < v` lexicographic order, one Bernoulli
/// draw each, so the result is identical on every platform.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::NoVertices);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("gnp edges are in range"))
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).unwrap()
}

/// Cycle 0-1-...-(n-1)-0. Requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Path 0-1-...-(n-1).
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}
