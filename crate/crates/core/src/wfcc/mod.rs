//! Wave Function Collapse Coloring.
//!
//! Each uncolored vertex holds a domain of still-permitted colors out of a
//! budget `1..=M`; its entropy is the domain size. A run seeds one
//! maximum-degree vertex with color 1, then repeatedly observes the
//! minimum-entropy vertex, collapses it to the smallest color in its domain
//! and propagates the choice. Propagation removes the color from every
//! uncolored neighbor; a neighbor left with a single color is colored on the
//! spot and pushed so its own choice cascades depth-first. An emptied domain
//! or a forced color clash abandons the run, and the solver restarts from
//! scratch with `M + 1`.

mod domain;

use std::time::Instant;

pub use domain::{DomainSnapshot, DomainState, TieOrder};

use crate::graph::{Color, Coloring, Graph, Vertex};
use crate::solve::{Deadline, SolveResult, TimedOut, POLL_INTERVAL};

/// How minimum-entropy ties are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Highest degree, then lowest vertex id.
    #[default]
    HighestDegree,
    /// Random priority per vertex, drawn from the configured seed.
    Random,
}

/// Which uncolored neighbors propagation restricts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PropagationMode {
    /// Every uncolored neighbor; an emptied domain signals a restart.
    #[default]
    AllNeighbors,
    /// Only neighbors whose entropy exceeds 1. Kept for comparison runs;
    /// collapsed colors are additionally checked against colored neighbors.
    EntropyAboveOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WfccConfig {
    pub tie_break: TieBreak,
    pub propagation: PropagationMode,
    pub seed: u64,
}

/// The current run cannot complete under its color budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Restart;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observation {
    Vertex(Vertex),
    Restart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollapseError {
    AlreadyColored(Vertex),
    EmptyDomain(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PropagationStats {
    /// Vertices colored because their domain shrank to one color.
    pub forced: usize,
    /// Length of the longest chain of forced colorings from the start vertex.
    pub cascade_depth: usize,
}

/// Minimum-entropy uncolored vertex, or `Restart` if that entropy is 0.
/// Returns `None` once every vertex is colored.
pub fn observe(state: &mut DomainState) -> Option<Observation> {
    let (v, entropy) = state.min_entropy_vertex()?;
    Some(if entropy == 0 {
        Observation::Restart
    } else {
        Observation::Vertex(v)
    })
}

/// Colors `v` with the smallest color left in its domain.
pub fn collapse(state: &mut DomainState, v: Vertex) -> Result<Color, CollapseError> {
    if state.is_colored(v) {
        return Err(CollapseError::AlreadyColored(v));
    }
    let c = state.min_color(v).ok_or(CollapseError::EmptyDomain(v))?;
    state.assign(v, c);
    Ok(c)
}

fn clashes(g: &Graph, state: &DomainState, v: Vertex, c: Color) -> bool {
    g.neighbors(v).iter().any(|&w| state.color(w) == Some(c))
}

/// Spreads the color of `start` through the graph with a LIFO stack.
///
/// With [`PropagationMode::AllNeighbors`], on `Ok` no uncolored vertex keeps
/// the color of a colored neighbor.
pub fn propagate(
    g: &Graph,
    state: &mut DomainState,
    start: Vertex,
    mode: PropagationMode,
) -> Result<PropagationStats, Restart> {
    assert!(state.is_colored(start), "propagate needs a colored vertex");
    let mut stats = PropagationStats::default();
    let mut stack = std::mem::take(&mut state.stack);
    stack.clear();
    stack.push((start, 0));
    let result = loop {
        let Some((u, depth)) = stack.pop() else {
            break Ok(stats);
        };
        let c = state.color(u).expect("stacked vertices are colored");
        let mut failed = false;
        for &w in g.neighbors(u) {
            if state.is_colored(w) {
                continue;
            }
            if mode == PropagationMode::EntropyAboveOne && state.entropy(w) <= 1 {
                continue;
            }
            if !state.remove_color(w, c) {
                continue;
            }
            match state.entropy(w) {
                0 => {
                    failed = true;
                    break;
                }
                1 => {
                    let only = state.min_color(w).expect("singleton domain");
                    if clashes(g, state, w, only) {
                        failed = true;
                        break;
                    }
                    state.assign(w, only);
                    state.note_forced();
                    stats.forced += 1;
                    stats.cascade_depth = stats.cascade_depth.max(depth + 1);
                    stack.push((w, depth + 1));
                }
                _ => {}
            }
        }
        if failed {
            break Err(Restart);
        }
    };
    state.stack = stack;
    result
}

/// One full attempt with budget `m`. `Ok(None)` means the run hit a restart.
fn attempt(
    g: &Graph,
    m: u32,
    order: TieOrder,
    seed_vertex: Vertex,
    mode: PropagationMode,
    deadline: &Deadline,
) -> Result<Option<DomainState>, TimedOut> {
    let mut state = DomainState::new(m, order);
    state.assign(seed_vertex, 1);
    if propagate(g, &mut state, seed_vertex, mode).is_err() {
        return Ok(None);
    }
    let mut steps = 0usize;
    while let Some(obs) = observe(&mut state) {
        steps += 1;
        if steps.is_multiple_of(POLL_INTERVAL) {
            deadline.check()?;
        }
        let Observation::Vertex(v) = obs else {
            return Ok(None);
        };
        let c = collapse(&mut state, v).expect("observed vertex has a color left");
        if mode == PropagationMode::EntropyAboveOne && clashes(g, &state, v, c) {
            return Ok(None);
        }
        if propagate(g, &mut state, v, mode).is_err() {
            return Ok(None);
        }
    }
    Ok(Some(state))
}

/// Lowest-id vertex of maximum degree.
pub fn seed_vertex(g: &Graph) -> Option<Vertex> {
    let max = g.max_degree();
    g.vertices().find(|&v| g.degree(v) == max)
}

pub fn solve(g: &Graph, cfg: &WfccConfig) -> SolveResult {
    solve_until(g, cfg, &Deadline::none()).expect("no deadline")
}

/// Runs WFC-C, restarting with a larger budget until a run completes.
/// A budget of `n` colors always completes, which bounds the restarts.
pub fn solve_until(
    g: &Graph,
    cfg: &WfccConfig,
    deadline: &Deadline,
) -> Result<SolveResult, TimedOut> {
    let started = Instant::now();
    let n = g.vertex_count();
    let Some(seed) = seed_vertex(g) else {
        return Ok(SolveResult::from_coloring(Coloring::uncolored(0), started));
    };
    let order = match cfg.tie_break {
        TieBreak::HighestDegree => TieOrder::highest_degree(g),
        TieBreak::Random => TieOrder::random(n, cfg.seed),
    };
    let initial = g.max_degree().max(1) as u32;
    let mut m = initial;
    loop {
        deadline.check()?;
        if let Some(state) = attempt(g, m, order.clone(), seed, cfg.propagation, deadline)? {
            let coloring = Coloring::from_assignment(state.colors());
            debug_assert_eq!(crate::graph::validate(g, &coloring), Ok(()));
            let k = coloring.color_count();
            return Ok(SolveResult {
                coloring,
                k,
                restarts: (m - initial) as usize,
                final_m: m as usize,
                forced_colorings: state.forced_count(),
                elapsed: started.elapsed(),
            });
        }
        assert!((m as usize) < n, "a budget of n colors cannot fail");
        m += 1;
    }
}
