//! DIMACS `.col` reading and writing, plus the plain-text coloring format
//! used by the command line (`<vertex> <color>` per line, 1-based).

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Color, Coloring, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("line {line}: edge before problem line")]
    MissingProblemLine { line: usize },
    #[error("no problem line found")]
    NoProblemLine,
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("line {line}: malformed line: {text:?}")]
    Malformed { line: usize, text: String },
}

impl DimacsError {
    pub fn line(&self) -> Option<usize> {
        match *self {
            DimacsError::NoProblemLine => None,
            DimacsError::MissingProblemLine { line }
            | DimacsError::DuplicateProblemLine { line }
            | DimacsError::VertexOutOfRange { line, .. }
            | DimacsError::SelfLoop { line, .. }
            | DimacsError::Malformed { line, .. } => Some(line),
        }
    }
}

/// Non-fatal findings while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimacsWarning {
    /// The problem line's edge count disagrees with the deduplicated count.
    EdgeCountMismatch { declared: usize, actual: usize },
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<DimacsWarning>,
}

fn malformed(line: usize, text: &str) -> DimacsError {
    DimacsError::Malformed {
        line,
        text: text.to_string(),
    }
}

/// Parses DIMACS `.col` text. `n` lines (vertex weights) are ignored.
pub fn parse_dimacs(text: &str) -> Result<ParsedGraph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let mut tokens = line.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => {}
            "n" => {}
            "p" => {
                if header.is_some() {
                    return Err(DimacsError::DuplicateProblemLine { line: line_no });
                }
                let (Some(fmt), Some(n), Some(m), None) =
                    (tokens.next(), tokens.next(), tokens.next(), tokens.next())
                else {
                    return Err(malformed(line_no, line));
                };
                if fmt != "edge" && fmt != "edges" && fmt != "col" {
                    return Err(malformed(line_no, line));
                }
                let n: usize = n.parse().map_err(|_| malformed(line_no, line))?;
                let m: usize = m.parse().map_err(|_| malformed(line_no, line))?;
                edges.reserve(m);
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(DimacsError::MissingProblemLine { line: line_no });
                };
                let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next())
                else {
                    return Err(malformed(line_no, line));
                };
                let u: u64 = u.parse().map_err(|_| malformed(line_no, line))?;
                let v: u64 = v.parse().map_err(|_| malformed(line_no, line))?;
                for w in [u, v] {
                    if w < 1 || w > n as u64 {
                        return Err(DimacsError::VertexOutOfRange {
                            line: line_no,
                            vertex: w,
                            n,
                        });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop {
                        line: line_no,
                        vertex: u,
                    });
                }
                edges.push((u as usize - 1, v as usize - 1));
            }
            _ => return Err(malformed(line_no, line)),
        }
    }

    let (n, declared) = header.ok_or(DimacsError::NoProblemLine)?;
    // Range and loop checks above make construction infallible.
    let graph = Graph::from_edges(n, edges).expect("edges validated during parse");
    let mut warnings = Vec::new();
    if graph.edge_count() != declared {
        warnings.push(DimacsWarning::EdgeCountMismatch {
            declared,
            actual: graph.edge_count(),
        });
    }
    Ok(ParsedGraph { graph, warnings })
}

/// Writes `p edge n m` followed by each edge once as `e u v`, `u < v`.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 12);
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringFileError {
    #[error("line {line}: malformed line: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: color must be at least 1")]
    ZeroColor { line: usize },
    #[error("line {line}: vertex {vertex} colored twice")]
    Duplicate { line: usize, vertex: u64 },
}

/// One line per colored vertex: `<1-based vertex> <color>`.
pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in coloring.assignment().iter().enumerate() {
        if let Some(c) = c {
            writeln!(out, "{} {}", v + 1, c).unwrap();
        }
    }
    out
}

/// Reads a coloring for a graph with `n` vertices. Vertices absent from the
/// file stay uncolored; blank lines and `c` comments are skipped.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring, ColoringFileError> {
    let mut assignment: Vec<Option<Color>> = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let bad = || ColoringFileError::Malformed {
            line: line_no,
            text: line.to_string(),
        };
        let mut tokens = line.split_whitespace();
        let (Some(v), Some(c), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(bad());
        };
        let v: u64 = v.parse().map_err(|_| bad())?;
        let c: Color = c.parse().map_err(|_| bad())?;
        if v < 1 || v > n as u64 {
            return Err(ColoringFileError::VertexOutOfRange {
                line: line_no,
                vertex: v,
                n,
            });
        }
        if c == 0 {
            return Err(ColoringFileError::ZeroColor { line: line_no });
        }
        let slot = &mut assignment[v as usize - 1];
        if slot.is_some() {
            return Err(ColoringFileError::Duplicate {
                line: line_no,
                vertex: v,
            });
        }
        *slot = Some(c);
    }
    Ok(Coloring::from_assignment(assignment))
}
