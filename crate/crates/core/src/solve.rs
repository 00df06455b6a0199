//! Types shared by every coloring algorithm.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::baselines::{self, OrderingPolicy, RlfTieBreak, SaturationMode};
use crate::graph::{Coloring, Graph};
use crate::wfcc::{self, WfccConfig};

/// Outcome of one solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub coloring: Coloring,
    /// Distinct colors used.
    pub k: usize,
    /// Budget increments before the successful run (WFC-C only, else 0).
    pub restarts: usize,
    /// Color budget of the successful run; equals `k` for the baselines.
    pub final_m: usize,
    /// Vertices colored by propagation on the successful run.
    pub forced_colorings: usize,
    pub elapsed: Duration,
}

impl SolveResult {
    pub(crate) fn from_coloring(coloring: Coloring, started: Instant) -> Self {
        let k = coloring.color_count();
        SolveResult {
            coloring,
            k,
            restarts: 0,
            final_m: k,
            forced_colorings: 0,
            elapsed: started.elapsed(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("solver exceeded its time limit")]
pub struct TimedOut;

/// Optional wall-clock limit polled by the solvers between steps.
#[derive(Debug, Clone, Copy, Default)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn after(limit: Duration) -> Self {
        Deadline(Instant::now().checked_add(limit))
    }

    #[inline]
    pub fn check(&self) -> Result<(), TimedOut> {
        match self.0 {
            Some(at) if Instant::now() >= at => Err(TimedOut),
            _ => Ok(()),
        }
    }
}

/// Steps between deadline polls inside solver loops.
pub(crate) const POLL_INTERVAL: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Wfcc,
    Ig,
    Dsatur,
    Rlf,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Wfcc,
        Algorithm::Ig,
        Algorithm::Dsatur,
        Algorithm::Rlf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Wfcc => "wfcc",
            Algorithm::Ig => "ig",
            Algorithm::Dsatur => "dsatur",
            Algorithm::Rlf => "rlf",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algorithm {0:?} (expected wfcc, ig, dsatur or rlf)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "wfcc" | "wfc-c" => Ok(Algorithm::Wfcc),
            "ig" | "greedy" => Ok(Algorithm::Ig),
            "dsatur" => Ok(Algorithm::Dsatur),
            "rlf" => Ok(Algorithm::Rlf),
            _ => Err(UnknownAlgorithm(s.to_string())),
        }
    }
}

/// Per-algorithm knobs. `seed` feeds WFC-C's random tie-break and RLF.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SolverOptions {
    pub wfcc: WfccConfig,
    pub ig_order: OrderingPolicy,
    pub saturation: SaturationMode,
    pub rlf_ties: RlfTieBreak,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    TimedOut(#[from] TimedOut),
    #[error(transparent)]
    Ordering(#[from] baselines::OrderingError),
}

/// Runs `alg` on `g` with the given options.
pub fn run_algorithm(
    alg: Algorithm,
    g: &Graph,
    opts: &SolverOptions,
    deadline: &Deadline,
) -> Result<SolveResult, SolveError> {
    Ok(match alg {
        Algorithm::Wfcc => {
            let cfg = WfccConfig {
                seed: opts.seed,
                ..opts.wfcc
            };
            wfcc::solve_until(g, &cfg, deadline)?
        }
        Algorithm::Ig => baselines::iterated_greedy_until(g, &opts.ig_order, deadline)?,
        Algorithm::Dsatur => baselines::dsatur_until(g, opts.saturation, deadline)?,
        Algorithm::Rlf => baselines::rlf_until(g, opts.rlf_ties, opts.seed, deadline)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for alg in Algorithm::ALL {
            assert_eq!(alg.name().parse::<Algorithm>(), Ok(alg));
        }
        assert_eq!("WFC-C".parse::<Algorithm>(), Ok(Algorithm::Wfcc));
        assert!("tabu".parse::<Algorithm>().is_err());
    }

    #[test]
    fn deadline_in_past_expires() {
        assert!(Deadline::none().check().is_ok());
        assert_eq!(Deadline::after(Duration::ZERO).check(), Err(TimedOut));
        assert!(Deadline::after(Duration::from_secs(3600)).check().is_ok());
    }
}
