//! Vertex coloring with Wave Function Collapse Coloring (WFC-C) and the
//! classic constructive baselines it is compared against: iterated greedy,
//! DSatur and recursive largest first.
//!
//! ```
//! use wfcc_core::{crown_graph, validate, wfcc, WfccConfig};
//!
//! let g = crown_graph(4).unwrap();
//! let result = wfcc::solve(&g, &WfccConfig::default());
//! assert_eq!(result.k, 2);
//! assert!(validate(&g, &result.coloring).is_ok());
//! ```

pub mod baselines;
pub mod bench;
mod bitset;
pub mod dimacs;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod solve;
pub mod wfcc;

pub use baselines::{dsatur, iterated_greedy, rlf, OrderingPolicy, RlfTieBreak, SaturationMode};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use exact::exact_chromatic;
pub use generators::{crown_graph, random_gnp};
pub use graph::{validate, Color, Coloring, Graph, Vertex, Violation};
pub use solve::{run_algorithm, Algorithm, Deadline, SolveResult, SolverOptions};
pub use wfcc::{PropagationMode, TieBreak, WfccConfig};
