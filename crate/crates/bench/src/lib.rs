//! Graph fixtures shared by the criterion benches.

use wfcc_core::{crown_graph, random_gnp, Graph};

/// `(name, graph)` pairs spanning sparse, dense and adversarial inputs.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("gnp_250_0.5", random_gnp(250, 0.5, 1).unwrap()),
        ("gnp_500_0.1", random_gnp(500, 0.1, 1).unwrap()),
        ("crown_64", crown_graph(64).unwrap()),
    ]
}
