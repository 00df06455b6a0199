use std::time::Instant;

use thiserror::Error;

use crate::graph::{Color, Coloring, Graph, Vertex};
use crate::solve::{Deadline, SolveError, SolveResult, POLL_INTERVAL};

/// Static vertex order for [`iterated_greedy`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum OrderingPolicy {
    /// Highest degree first, lowest id among equal degrees.
    #[default]
    HighestDegreeFirst,
    NaturalIndex,
    /// Must be a permutation of `0..n`.
    Explicit(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("ordering has {got} entries, graph has {n} vertices")]
    WrongLength { got: usize, n: usize },
    #[error("ordering repeats or skips vertex {0}")]
    NotPermutation(Vertex),
}

impl OrderingPolicy {
    pub fn resolve(&self, g: &Graph) -> Result<Vec<Vertex>, OrderingError> {
        let n = g.vertex_count();
        match self {
            OrderingPolicy::HighestDegreeFirst => {
                let mut order: Vec<Vertex> = g.vertices().collect();
                order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
                Ok(order)
            }
            OrderingPolicy::NaturalIndex => Ok(g.vertices().collect()),
            OrderingPolicy::Explicit(order) => {
                if order.len() != n {
                    return Err(OrderingError::WrongLength {
                        got: order.len(),
                        n,
                    });
                }
                let mut seen = vec![false; n];
                for &v in order {
                    if v >= n || std::mem::replace(&mut seen[v], true) {
                        return Err(OrderingError::NotPermutation(v));
                    }
                }
                Ok(order.clone())
            }
        }
    }
}

/// Smallest color absent from the colored neighborhood of `v`.
///
/// `marks` must have at least `deg(v) + 2` slots; `stamp` must differ from
/// every value already stored there.
#[inline]
pub(crate) fn smallest_free_color(
    g: &Graph,
    colors: &[Color],
    v: Vertex,
    marks: &mut [u32],
    stamp: u32,
) -> Color {
    for &w in g.neighbors(v) {
        let c = colors[w] as usize;
        if c != 0 && c < marks.len() {
            marks[c] = stamp;
        }
    }
    (1..marks.len())
        .find(|&c| marks[c] != stamp)
        .expect("deg + 1 colors cannot all be taken") as Color
}

pub fn iterated_greedy(g: &Graph, order: &OrderingPolicy) -> Result<SolveResult, OrderingError> {
    match iterated_greedy_until(g, order, &Deadline::none()) {
        Ok(r) => Ok(r),
        Err(SolveError::Ordering(e)) => Err(e),
        Err(SolveError::TimedOut(_)) => unreachable!("no deadline"),
    }
}

/// One pass over the order, giving each vertex the smallest color not used
/// by an already colored neighbor.
pub fn iterated_greedy_until(
    g: &Graph,
    order: &OrderingPolicy,
    deadline: &Deadline,
) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let order = order.resolve(g)?;
    let mut colors: Vec<Color> = vec![0; g.vertex_count()];
    let mut marks = vec![0u32; g.max_degree() + 2];
    for (step, &v) in order.iter().enumerate() {
        if step % POLL_INTERVAL == POLL_INTERVAL - 1 {
            deadline.check()?;
        }
        colors[v] = smallest_free_color(g, &colors, v, &mut marks, step as u32 + 1);
    }
    Ok(SolveResult::from_coloring(
        Coloring::from_colors(colors),
        started,
    ))
}
