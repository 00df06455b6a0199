//! Simple undirected graphs, colorings, and the proper-coloring check.

use std::fmt;

use thiserror::Error;

/// Vertex identifier, 0-based.
pub type Vertex = usize;

/// Color value. Colors are 1-based; `0` is never a valid color.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
}

/// Immutable simple undirected graph in adjacency-list form.
///
/// Every adjacency list is strictly increasing and the relation is
/// symmetric. Construct through [`Graph::from_edges`], which canonicalizes
/// duplicates and both orientations of an edge.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
    max_degree: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
            max_degree: 0,
        }
    }

    /// Builds a canonical graph from an edge list. Duplicate edges and
    /// reversed duplicates collapse to a single undirected edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        let g = Graph {
            adjacency,
            edge_count,
            max_degree,
        };
        debug_assert!(g.is_canonical());
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Δ(G); zero for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adjacency.len()
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Symmetric, loop-free, strictly increasing adjacency lists.
    pub fn is_canonical(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v != u && v < self.adjacency.len() && self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("m", &self.edge_count)
            .field("max_degree", &self.max_degree)
            .finish()
    }
}

/// Partial or total vertex coloring. Colors are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<Option<Color>>,
}

impl Coloring {
    /// All vertices uncolored.
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            assignment: vec![None; n],
        }
    }

    /// Total coloring from a color per vertex.
    ///
    /// # Panics
    /// If any color is `0`.
    pub fn from_colors(colors: Vec<Color>) -> Self {
        assert!(colors.iter().all(|&c| c >= 1), "colors are 1-based");
        Coloring {
            assignment: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_assignment(assignment: Vec<Option<Color>>) -> Self {
        assert!(
            assignment.iter().flatten().all(|&c| c >= 1),
            "colors are 1-based"
        );
        Coloring { assignment }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.assignment[v]
    }

    pub fn set(&mut self, v: Vertex, color: Color) {
        assert!(color >= 1, "colors are 1-based");
        self.assignment[v] = Some(color);
    }

    pub fn assignment(&self) -> &[Option<Color>] {
        &self.assignment
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// Number of distinct colors among assigned vertices.
    pub fn color_count(&self) -> usize {
        let mut seen: Vec<Color> = self.assignment.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// First problem found by [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// The coloring does not cover the graph's vertex set.
    SizeMismatch { graph: usize, coloring: usize },
    Uncolored(Vertex),
    /// Both endpoints of edge `(u, v)`, `u < v`, share `color`.
    Conflict { u: Vertex, v: Vertex, color: Color },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SizeMismatch { graph, coloring } => write!(
                f,
                "coloring has {coloring} entries for a graph with {graph} vertices"
            ),
            Violation::Uncolored(v) => write!(f, "vertex {} is uncolored", v + 1),
            Violation::Conflict { u, v, color } => {
                write!(f, "edge ({}, {}) has both ends colored {color}", u + 1, v + 1)
            }
        }
    }
}

/// Checks that `coloring` is total and proper on `g`.
///
/// Uncolored vertices are reported before conflicts; edges are scanned in
/// canonical order.
pub fn validate(g: &Graph, coloring: &Coloring) -> Result<(), Violation> {
    if coloring.len() != g.vertex_count() {
        return Err(Violation::SizeMismatch {
            graph: g.vertex_count(),
            coloring: coloring.len(),
        });
    }
    if let Some(v) = coloring.assignment.iter().position(Option::is_none) {
        return Err(Violation::Uncolored(v));
    }
    for (u, v) in g.edges() {
        if coloring.assignment[u] == coloring.assignment[v] {
            return Err(Violation::Conflict {
                u,
                v,
                color: coloring.assignment[u].unwrap(),
            });
        }
    }
    Ok(())
}
