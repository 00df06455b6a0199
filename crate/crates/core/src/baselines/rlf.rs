use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Color, Coloring, Graph, Vertex};
use crate::solve::{Deadline, SolveResult, TimedOut, POLL_INTERVAL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RlfTieBreak {
    /// Uniform choice among tied vertices, driven by the seed.
    #[default]
    Random,
    LowestId,
}

/// Picks the best-scoring vertex of `candidates`; ties go to the lowest id or
/// to a reservoir-sampled random member.
fn pick(
    candidates: &[Vertex],
    score: impl Fn(Vertex) -> usize,
    ties: RlfTieBreak,
    rng: &mut ChaCha8Rng,
) -> usize {
    let mut best = 0;
    let mut best_score = score(candidates[0]);
    let mut tied = 1u32;
    for (i, &v) in candidates.iter().enumerate().skip(1) {
        let s = score(v);
        if s > best_score {
            best = i;
            best_score = s;
            tied = 1;
        } else if s == best_score {
            match ties {
                RlfTieBreak::LowestId => {
                    if v < candidates[best] {
                        best = i;
                    }
                }
                RlfTieBreak::Random => {
                    tied += 1;
                    if rng.gen_range(0..tied) == 0 {
                        best = i;
                    }
                }
            }
        }
    }
    best
}

pub fn rlf(g: &Graph, ties: RlfTieBreak, seed: u64) -> SolveResult {
    rlf_until(g, ties, seed, &Deadline::none()).expect("no deadline")
}

/// Builds one color class at a time. Each class starts from the uncolored
/// vertex of highest degree in the uncolored subgraph; the candidate pool
/// `U` then keeps receiving the candidate with most neighbors in the
/// excluded set `W`, and every neighbor of a class member moves from `U` to
/// `W`. The class closes when `U` is empty, so it is a maximal independent
/// set of the vertices uncolored when it opened.
pub fn rlf_until(
    g: &Graph,
    ties: RlfTieBreak,
    seed: u64,
    deadline: &Deadline,
) -> Result<SolveResult, TimedOut> {
    let started = Instant::now();
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors: Vec<Color> = vec![0; n];
    // Degree within the uncolored subgraph.
    let mut live_degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    // Neighbors in W, valid for members of U.
    let mut into_w = vec![0usize; n];
    let mut in_u = vec![false; n];
    let mut uncolored: Vec<Vertex> = g.vertices().collect();
    let mut pool: Vec<Vertex> = Vec::with_capacity(n);
    let mut class: Vec<Vertex> = Vec::new();
    let mut color: Color = 0;
    let mut step = 0usize;

    while !uncolored.is_empty() {
        color += 1;
        pool.clear();
        pool.extend_from_slice(&uncolored);
        for &v in &pool {
            in_u[v] = true;
            into_w[v] = 0;
        }
        class.clear();

        let first = pick(&pool, |v| live_degree[v], ties, &mut rng);
        let mut chosen = pool.swap_remove(first);
        loop {
            step += 1;
            if step.is_multiple_of(POLL_INTERVAL) {
                deadline.check()?;
            }
            in_u[chosen] = false;
            colors[chosen] = color;
            class.push(chosen);
            for &w in g.neighbors(chosen) {
                if in_u[w] {
                    in_u[w] = false;
                    for &x in g.neighbors(w) {
                        if in_u[x] {
                            into_w[x] += 1;
                        }
                    }
                }
            }
            pool.retain(|&v| in_u[v]);
            if pool.is_empty() {
                break;
            }
            let next = pick(&pool, |v| into_w[v], ties, &mut rng);
            chosen = pool.swap_remove(next);
        }

        for &v in &class {
            for &w in g.neighbors(v) {
                if colors[w] == 0 {
                    live_degree[w] -= 1;
                }
            }
        }
        uncolored.retain(|&v| colors[v] == 0);
    }
    Ok(SolveResult::from_coloring(
        Coloring::from_colors(colors),
        started,
    ))
}
