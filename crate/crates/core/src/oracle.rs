//! Brute-force reference computations for tests: exact χ(G), the best
//! greedy coloring over all vertex orderings, and a from-scratch
//! recomputation of WFC-C propagation.

use thiserror::Error;

use crate::exact::{exact_chromatic_with_limit, ExactColoring, ExactError};
use crate::graph::{Color, Graph, Vertex};
use crate::wfcc::{DomainSnapshot, Restart};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest graph for exhaustive chromatic search.
    pub max_vertices: usize,
    /// Largest number of orderings enumerated (n! must not exceed it).
    pub max_orderings: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 12,
            max_orderings: 40_320,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n}! orderings exceed the budget of {budget}")]
    TooManyOrderings { n: usize, budget: u64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub fn exact_chromatic(g: &Graph, budget: &OracleBudget) -> Result<ExactColoring, OracleError> {
    Ok(exact_chromatic_with_limit(g, budget.max_vertices)?)
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i)).unwrap_or(u64::MAX)
}

/// Minimum number of colors greedy coloring reaches over every vertex
/// ordering. Orderings sharing a prefix share its greedy coloring; a prefix
/// already using as many colors as the best complete ordering is skipped,
/// since extending it can only add colors.
pub fn best_greedy_ordering_k(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if factorial(n) > budget.max_orderings {
        return Err(OracleError::TooManyOrderings {
            n,
            budget: budget.max_orderings,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut colors: Vec<Color> = vec![0; n];
    let mut best = n;
    extend(g, &mut colors, 0, 0, &mut best);
    Ok(best)
}

fn extend(g: &Graph, colors: &mut [Color], placed: usize, used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    if placed == colors.len() {
        *best = used;
        return;
    }
    for v in 0..colors.len() {
        if colors[v] != 0 {
            continue;
        }
        let mut c: Color = 1;
        while g.neighbors(v).iter().any(|&w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
        extend(g, colors, placed + 1, used.max(c as usize), best);
        colors[v] = 0;
    }
}

/// Recomputes WFC-C propagation without incremental bookkeeping.
///
/// `snapshot` must have `start` colored and every other colored vertex's
/// color already excluded from its uncolored neighbors' domains. Each round
/// recomputes every uncolored domain as its input domain minus the colors of
/// all colored neighbors; an empty domain is a restart, and the lowest-id
/// vertex whose domain shrank to a single color gets that color. Rounds stop
/// when no such vertex remains.
pub fn naive_propagate(
    g: &Graph,
    snapshot: &DomainSnapshot,
    start: Vertex,
) -> Result<DomainSnapshot, Restart> {
    assert!(snapshot.colors[start].is_some(), "start vertex must be colored");
    let n = snapshot.colors.len();
    let mut colors = snapshot.colors.clone();
    let mut domains = snapshot.domains.clone();
    loop {
        for w in 0..n {
            if colors[w].is_some() {
                domains[w].clear();
                continue;
            }
            domains[w] = snapshot.domains[w]
                .iter()
                .copied()
                .filter(|&c| g.neighbors(w).iter().all(|&x| colors[x] != Some(c)))
                .collect();
            if domains[w].is_empty() {
                return Err(Restart);
            }
        }
        let forced = (0..n).find(|&w| {
            colors[w].is_none() && domains[w].len() == 1 && snapshot.domains[w].len() > 1
        });
        match forced {
            Some(w) => colors[w] = Some(domains[w][0]),
            None => break,
        }
    }
    Ok(DomainSnapshot {
        m: snapshot.m,
        colors,
        domains,
    })
}
