use std::time::Instant;

use crate::bitset;
use crate::graph::{Color, Coloring, Graph, Vertex};
use crate::solve::{Deadline, SolveResult, TimedOut, POLL_INTERVAL};

/// What "saturation" counts for an uncolored vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SaturationMode {
    /// Distinct colors among colored neighbors (Brélaz).
    #[default]
    DistinctColors,
    /// Number of colored neighbors.
    ColoredNeighbors,
}

pub fn dsatur(g: &Graph, mode: SaturationMode) -> SolveResult {
    dsatur_until(g, mode, &Deadline::none()).expect("no deadline")
}

/// Repeatedly colors the uncolored vertex of maximum saturation (ties: higher
/// degree, then lower id) with its smallest feasible color. Selection is a
/// linear scan over the uncolored vertices.
pub fn dsatur_until(
    g: &Graph,
    mode: SaturationMode,
    deadline: &Deadline,
) -> Result<SolveResult, TimedOut> {
    let started = Instant::now();
    let n = g.vertex_count();
    // Colors never exceed Δ + 1.
    let words = bitset::words_for(g.max_degree() + 1);
    let mut neighbor_colors = vec![0u64; n * words];
    let mut saturation = vec![0usize; n];
    let mut colors: Vec<Color> = vec![0; n];
    let mut uncolored: Vec<Vertex> = g.vertices().collect();

    let key = |v: Vertex, sat: &[usize]| (sat[v], g.degree(v), std::cmp::Reverse(v));

    let mut step = 0usize;
    while !uncolored.is_empty() {
        step += 1;
        if step.is_multiple_of(POLL_INTERVAL) {
            deadline.check()?;
        }
        let (pos, &u) = uncolored
            .iter()
            .enumerate()
            .max_by_key(|&(_, &v)| key(v, &saturation))
            .unwrap();
        uncolored.swap_remove(pos);

        let used = &neighbor_colors[u * words..(u + 1) * words];
        let c = bitset::first_clear(used) as Color + 1;
        colors[u] = c;

        for &w in g.neighbors(u) {
            if colors[w] != 0 {
                continue;
            }
            let slot = &mut neighbor_colors[w * words..(w + 1) * words];
            let fresh = !bitset::get(slot, c as usize - 1);
            if fresh {
                bitset::set(slot, c as usize - 1);
            }
            if fresh || mode == SaturationMode::ColoredNeighbors {
                saturation[w] += 1;
            }
        }
    }
    Ok(SolveResult::from_coloring(
        Coloring::from_colors(colors),
        started,
    ))
}
