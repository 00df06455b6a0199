//! Exact chromatic number for small graphs, used as a test oracle.

use thiserror::Error;

use crate::graph::{Color, Coloring, Graph, Vertex};

pub const DEFAULT_ORACLE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {n} vertices, exact search is limited to {limit}")]
pub struct ExactError {
    pub n: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactColoring {
    pub chromatic_number: usize,
    pub witness: Coloring,
}

/// χ(G) with a witness, for graphs up to [`DEFAULT_ORACLE_LIMIT`] vertices.
pub fn exact_chromatic(g: &Graph) -> Result<ExactColoring, ExactError> {
    exact_chromatic_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// Tries k = 1, 2, ... with backtracking over vertices in largest-degree
/// order. New colors are opened in increasing order only, which removes
/// color-permutation symmetry.
pub fn exact_chromatic_with_limit(g: &Graph, limit: usize) -> Result<ExactColoring, ExactError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(ExactError { n, limit });
    }
    if n == 0 {
        return Ok(ExactColoring {
            chromatic_number: 0,
            witness: Coloring::uncolored(0),
        });
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    for k in 1..=n {
        let mut colors: Vec<Color> = vec![0; n];
        if assign(g, &order, 0, k as Color, 0, &mut colors) {
            return Ok(ExactColoring {
                chromatic_number: k,
                witness: Coloring::from_colors(colors),
            });
        }
    }
    unreachable!("n colors always suffice")
}

fn assign(
    g: &Graph,
    order: &[Vertex],
    depth: usize,
    k: Color,
    used: Color,
    colors: &mut [Color],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let ceiling = (used + 1).min(k);
    for c in 1..=ceiling {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if assign(g, order, depth + 1, k, used.max(c), colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}
