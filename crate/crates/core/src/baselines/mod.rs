//! Constructive baselines: iterated greedy, DSatur and iterative RLF.

mod dsatur;
mod greedy;
mod rlf;

pub use dsatur::{dsatur, dsatur_until, SaturationMode};
pub use greedy::{iterated_greedy, iterated_greedy_until, OrderingError, OrderingPolicy};
pub use rlf::{rlf, rlf_until, RlfTieBreak};
