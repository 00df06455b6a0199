//! Repetition-based benchmark harness over DIMACS files and generated
//! graph families.

mod best_known;
mod report;

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

pub use best_known::{bundled_best_known, load_best_known, parse_best_known, BestKnownError};
pub use report::{parse_csv, render_report, speed_ratios, ReportError, ReportFormat, CSV_HEADER};

use crate::dimacs::{parse_dimacs, DimacsError};
use crate::generators::{crown_graph, random_gnp, GeneratorError};
use crate::graph::{validate, Graph, Violation};
use crate::solve::{run_algorithm, Algorithm, Deadline, SolveError, SolverOptions};

/// Where a benchmark graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSpec {
    File(PathBuf),
    Crown(usize),
    /// G(n, p) seeded with the run's global seed.
    Gnp { n: usize, p: f64 },
}

impl InstanceSpec {
    /// Report name: the file name without a `.col` suffix, or a tag such as
    /// `crown_4` / `gnp_250_0.5` for generated graphs.
    pub fn name(&self) -> String {
        match self {
            InstanceSpec::File(path) => {
                let file = path
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                file.strip_suffix(".col").map(str::to_string).unwrap_or(file)
            }
            InstanceSpec::Crown(n) => format!("crown_{n}"),
            InstanceSpec::Gnp { n, p } => format!("gnp_{n}_{p}"),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad generator spec {0:?} (expected crown:<n> or gnp:<n>,<p>)")]
pub struct GeneratorSpecError(pub String);

impl FromStr for InstanceSpec {
    type Err = GeneratorSpecError;

    /// Parses generator specs `crown:<n>` and `gnp:<n>,<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeneratorSpecError(s.to_string());
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "crown" => Ok(InstanceSpec::Crown(args.trim().parse().map_err(|_| bad())?)),
            "gnp" => {
                let (n, p) = args.split_once(',').ok_or_else(bad)?;
                Ok(InstanceSpec::Gnp {
                    n: n.trim().parse().map_err(|_| bad())?,
                    p: p.trim().parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algorithms: Vec<Algorithm>,
    pub instances: Vec<InstanceSpec>,
    pub repetitions: usize,
    pub seed: u64,
    /// Per-solve wall-clock limit. A solve past it turns the row into N/A.
    pub timeout: Option<Duration>,
    pub options: SolverOptions,
    pub best_known: HashMap<String, usize>,
    pub format: ReportFormat,
    pub output: Option<PathBuf>,
    /// Worker threads; instances are spread across them, while all runs of
    /// one (instance, algorithm) pair stay on one worker.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algorithms: Algorithm::ALL.to_vec(),
            instances: Vec::new(),
            repetitions: 100,
            seed: 0,
            timeout: Some(Duration::from_secs(60)),
            options: SolverOptions::default(),
            best_known: HashMap::new(),
            format: ReportFormat::Csv,
            output: None,
            jobs: 1,
        }
    }
}

/// One (instance, algorithm) line of a report. Statistics are in
/// microseconds; `k` and the timings are `None` when a run timed out.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: Algorithm,
    pub k: Option<usize>,
    pub best_known: Option<usize>,
    pub repetitions: usize,
    pub time_mean_us: Option<f64>,
    pub time_median_us: Option<f64>,
    pub time_stddev_us: Option<f64>,
    /// WFC-C budget increments; `None` for other algorithms.
    pub restarts: Option<usize>,
    pub seed: u64,
}

impl BenchRow {
    pub fn timed_out(&self) -> bool {
        self.k.is_none()
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("nothing to run: need at least one algorithm and one instance")]
    EmptyConfig,
    #[error("repetitions must be at least 1")]
    NoRepetitions,
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parsing {path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: DimacsError,
    },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("{algorithm} on {instance}: {source}")]
    Solver {
        instance: String,
        algorithm: Algorithm,
        #[source]
        source: SolveError,
    },
    #[error("{algorithm} produced an improper coloring of {instance}: {violation}")]
    InvalidColoring {
        instance: String,
        algorithm: Algorithm,
        violation: Violation,
    },
    #[error("building worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Reads and parses a DIMACS file.
pub fn load_instance(path: &Path) -> Result<Graph, BenchError> {
    let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_dimacs(&text)
        .map(|parsed| parsed.graph)
        .map_err(|source| BenchError::Parse {
            path: path.to_path_buf(),
            source,
        })
}

fn build_instance(spec: &InstanceSpec, seed: u64) -> Result<Graph, BenchError> {
    match spec {
        InstanceSpec::File(path) => load_instance(path),
        InstanceSpec::Crown(n) => Ok(crown_graph(*n)?),
        InstanceSpec::Gnp { n, p } => Ok(random_gnp(*n, *p, seed)?),
    }
}

/// Exact match first, then case-insensitive (DIMACS files ship as both
/// `DSJC250.5.col` and `dsjc250.5.col`).
pub fn lookup_best_known(table: &HashMap<String, usize>, instance: &str) -> Option<usize> {
    table.get(instance).copied().or_else(|| {
        table
            .iter()
            .find(|(name, _)| name.eq_ignore_ascii_case(instance))
            .map(|(_, &k)| k)
    })
}

/// Mean, median and sample standard deviation.
pub fn summarize(samples: &[f64]) -> (f64, f64, f64) {
    assert!(!samples.is_empty());
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median = if sorted.len().is_multiple_of(2) {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    } else {
        sorted[mid]
    };
    let stddev = if samples.len() > 1 {
        (samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    (mean, median, stddev)
}

/// Times `cfg.repetitions` solves of one algorithm on one graph. Every
/// coloring is validated; only the solver call is inside the timed region.
pub fn bench_pair(
    g: &Graph,
    instance: &str,
    algorithm: Algorithm,
    cfg: &RunConfig,
) -> Result<BenchRow, BenchError> {
    let opts = SolverOptions {
        seed: cfg.seed,
        ..cfg.options.clone()
    };
    let mut row = BenchRow {
        instance: instance.to_string(),
        algorithm,
        k: None,
        best_known: lookup_best_known(&cfg.best_known, instance),
        repetitions: cfg.repetitions,
        time_mean_us: None,
        time_median_us: None,
        time_stddev_us: None,
        restarts: None,
        seed: cfg.seed,
    };
    let mut samples = Vec::with_capacity(cfg.repetitions);
    let mut outcome = None;
    for _ in 0..cfg.repetitions {
        let deadline = cfg.timeout.map_or_else(Deadline::none, Deadline::after);
        let start = Instant::now();
        let result = run_algorithm(algorithm, g, &opts, &deadline);
        let elapsed = start.elapsed();
        let result = match result {
            Ok(r) => r,
            Err(SolveError::TimedOut(_)) => return Ok(row),
            Err(source) => {
                return Err(BenchError::Solver {
                    instance: instance.to_string(),
                    algorithm,
                    source,
                })
            }
        };
        if let Err(violation) = validate(g, &result.coloring) {
            return Err(BenchError::InvalidColoring {
                instance: instance.to_string(),
                algorithm,
                violation,
            });
        }
        samples.push(elapsed.as_secs_f64() * 1e6);
        outcome.get_or_insert((result.k, result.restarts));
    }
    let (k, restarts) = outcome.expect("at least one repetition");
    let (mean, median, stddev) = summarize(&samples);
    row.k = Some(k);
    row.restarts = (algorithm == Algorithm::Wfcc).then_some(restarts);
    row.time_mean_us = Some(mean);
    row.time_median_us = Some(median);
    row.time_stddev_us = Some(stddev);
    Ok(row)
}

/// Runs every (instance, algorithm) pair. Rows come back in instance order,
/// then algorithm order, regardless of `jobs`.
pub fn run_bench(cfg: &RunConfig) -> Result<Vec<BenchRow>, BenchError> {
    if cfg.algorithms.is_empty() || cfg.instances.is_empty() {
        return Err(BenchError::EmptyConfig);
    }
    if cfg.repetitions == 0 {
        return Err(BenchError::NoRepetitions);
    }
    let per_instance = |spec: &InstanceSpec| -> Result<Vec<BenchRow>, BenchError> {
        let g = build_instance(spec, cfg.seed)?;
        let name = spec.name();
        cfg.algorithms
            .iter()
            .map(|&alg| bench_pair(&g, &name, alg, cfg))
            .collect()
    };
    let grouped: Vec<Vec<BenchRow>> = if cfg.jobs <= 1 {
        cfg.instances
            .iter()
            .map(per_instance)
            .collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()?;
        pool.install(|| {
            cfg.instances
                .par_iter()
                .map(per_instance)
                .collect::<Result<_, _>>()
        })?
    };
    Ok(grouped.into_iter().flatten().collect())
}
