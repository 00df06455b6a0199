//! Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
//! non-zero if any criterion fails.
//!
//! The DIMACS comparison looks for `.col` files in `<workspace>/instances/`
//! and skips when they are missing.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wfcc_core::baselines::{dsatur, iterated_greedy, rlf, OrderingPolicy, RlfTieBreak, SaturationMode};
use wfcc_core::bench::{
    parse_csv, render_report, run_bench, speed_ratios, InstanceSpec, ReportFormat, RunConfig,
};
use wfcc_core::dimacs::parse_dimacs;
use wfcc_core::exact::exact_chromatic;
use wfcc_core::generators::{complete_graph, crown_graph, random_gnp};
use wfcc_core::graph::{validate, Graph, Vertex};
use wfcc_core::oracle::{best_greedy_ordering_k, naive_propagate, OracleBudget};
use wfcc_core::wfcc::{self, propagate, DomainState, PropagationMode, TieBreak, TieOrder, WfccConfig};
use wfcc_core::{Algorithm, SolveResult, SolverOptions};

type Criterion = fn() -> Verdict;

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

/// Every WFC-C result seen by the suites goes through this check.
fn wfcc_bounds(g: &Graph, r: &SolveResult) -> Result<(), String> {
    let n = g.vertex_count();
    if r.restarts > n || r.final_m > n.max(1) || r.k > r.final_m {
        return Err(format!(
            "n={n}: restarts={} final_m={} k={}",
            r.restarts, r.final_m, r.k
        ));
    }
    Ok(())
}

fn all_algorithms(g: &Graph, seed: u64) -> Vec<(Algorithm, SolveResult)> {
    vec![
        (Algorithm::Wfcc, wfcc::solve(g, &WfccConfig::default())),
        (
            Algorithm::Ig,
            iterated_greedy(g, &OrderingPolicy::HighestDegreeFirst).unwrap(),
        ),
        (Algorithm::Dsatur, dsatur(g, SaturationMode::DistinctColors)),
        (Algorithm::Rlf, rlf(g, RlfTieBreak::Random, seed)),
    ]
}

fn validity_suite() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11);
    let mut graphs: Vec<(String, Graph)> = (0..500)
        .map(|i| {
            let n = rng.gen_range(2..=60);
            let p = [0.1, 0.3, 0.5, 0.8][rng.gen_range(0..4)];
            let seed: u64 = rng.gen();
            (format!("#{i} gnp({n},{p},{seed})"), random_gnp(n, p, seed).unwrap())
        })
        .collect();
    graphs.extend((2..=10).map(|n| (format!("crown({n})"), crown_graph(n).unwrap())));
    let started = Instant::now();
    let mut solves = 0;
    for (i, (name, g)) in graphs.iter().enumerate() {
        for (alg, r) in all_algorithms(g, i as u64) {
            solves += 1;
            if let Err(v) = validate(g, &r.coloring) {
                return Verdict::Fail(format!("{alg} on {name}: {v}"));
            }
            if alg == Algorithm::Wfcc {
                if let Err(e) = wfcc_bounds(g, &r) {
                    return Verdict::Fail(format!("{name}: {e}"));
                }
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(30) {
        return Verdict::Fail(format!("took {elapsed:?}, limit 30s"));
    }
    Verdict::Pass(format!(
        "{} graphs, {solves} solves, all proper ({elapsed:.2?})",
        graphs.len()
    ))
}

fn crown_claim() -> Verdict {
    for n in 2..=10 {
        let g = crown_graph(n).unwrap();
        let w = wfcc::solve(&g, &WfccConfig::default());
        if w.k != 2 {
            return Verdict::Fail(format!("WFC-C used {} colors on crown({n})", w.k));
        }
        let interleaved: Vec<Vertex> = (0..n).flat_map(|i| [i, n + i]).collect();
        let ig = iterated_greedy(&g, &OrderingPolicy::Explicit(interleaved)).unwrap();
        if ig.k != n {
            return Verdict::Fail(format!("interleaved greedy used {} on crown({n})", ig.k));
        }
    }
    Verdict::Pass("WFC-C k=2 and interleaved greedy k=n for n in 2..=10".into())
}

fn oracle_dominance() -> Verdict {
    let started = Instant::now();
    // 9! orderings so every graph in range is enumerated completely.
    let budget = OracleBudget {
        max_orderings: 362_880,
        ..OracleBudget::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E);
    let mut complete = 0;
    for i in 0..200 {
        let n = rng.gen_range(4..=9);
        let p = [0.2, 0.5, 0.8][rng.gen_range(0..3)];
        let g = random_gnp(n, p, rng.gen()).unwrap();
        let chi = exact_chromatic(&g).unwrap().chromatic_number;
        for (alg, r) in all_algorithms(&g, i) {
            if r.k < chi {
                return Verdict::Fail(format!("{alg} used {} < chi={chi} on {g:?}", r.k));
            }
            if alg == Algorithm::Wfcc {
                if let Err(e) = wfcc_bounds(&g, &r) {
                    return Verdict::Fail(e);
                }
            }
        }
        if let Ok(best) = best_greedy_ordering_k(&g, &budget) {
            complete += 1;
            if best != chi {
                return Verdict::Fail(format!("best ordering {best} != chi {chi} on {g:?}"));
            }
        }
    }
    Verdict::Pass(format!(
        "200 graphs, {complete} complete enumerations match chi ({:.2?})",
        started.elapsed()
    ))
}

fn propagation_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9A0);
    let mut restarts = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=16);
        let g = random_gnp(n, rng.gen_range(0.05..0.95), rng.gen()).unwrap();
        let start = rng.gen_range(0..n);
        let m = rng.gen_range(1..=g.max_degree() as u32 + 1);
        let mut state = DomainState::new(m, TieOrder::highest_degree(&g));
        state.assign(start, 1);
        let before = state.snapshot();
        let ours = propagate(&g, &mut state, start, PropagationMode::AllNeighbors);
        let reference = naive_propagate(&g, &before, start);
        match (ours, reference) {
            (Ok(_), Ok(expected)) if state.snapshot() == expected => {}
            (Err(_), Err(_)) => restarts += 1,
            (ours, _) => {
                return Verdict::Fail(format!(
                    "{g:?} start={start} m={m}: stack ok={} differs from reference",
                    ours.is_ok()
                ))
            }
        }
    }
    Verdict::Pass(format!("500 triples identical ({restarts} restart verdicts)"))
}

fn workspace_instances() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn find_instance(dir: &Path, name: &str) -> Option<PathBuf> {
    let entries = std::fs::read_dir(dir).ok()?;
    entries
        .flatten()
        .map(|e| e.path())
        .find(|p| {
            p.file_name()
                .and_then(|f| f.to_str())
                .is_some_and(|f| f.eq_ignore_ascii_case(&format!("{name}.col")))
        })
}

/// Table values: (instance, WFC-C k, IG k, DSatur k).
const TABLE: [(&str, usize, usize, usize); 5] = [
    ("dsjc250.5", 37, 43, 41),
    ("le450_15c", 24, 35, 27),
    ("le450_25c", 29, 42, 31),
    ("flat300_28_0", 42, 48, 46),
    ("dsjc500.1", 16, 21, 19),
];

fn dimacs_reproduction() -> Verdict {
    let dir = workspace_instances();
    let found: Vec<_> = TABLE
        .iter()
        .filter_map(|row| find_instance(&dir, row.0).map(|p| (row, p)))
        .collect();
    if found.is_empty() {
        return Verdict::Skip(format!("no DIMACS files in {}", dir.display()));
    }
    let mut lines = Vec::new();
    for (&(name, wfcc_k, ig_k, dsatur_k), path) in &found {
        let text = std::fs::read_to_string(path).unwrap();
        let g = parse_dimacs(&text).unwrap().graph;
        let w = wfcc::solve(&g, &WfccConfig::default()).k;
        let ig = iterated_greedy(&g, &OrderingPolicy::HighestDegreeFirst).unwrap().k;
        let ds = dsatur(&g, SaturationMode::DistinctColors).k;
        let within = |got: usize, want: usize, tol: usize| got.abs_diff(want) <= tol;
        lines.push(format!("{name}: wfcc {w} ({wfcc_k}) ig {ig} ({ig_k}) dsatur {ds} ({dsatur_k})"));
        if !(within(w, wfcc_k, 4) && within(ds, dsatur_k, 3) && within(ig, ig_k, 4)) {
            return Verdict::Fail(lines.join("; "));
        }
    }
    let missing = TABLE.len() - found.len();
    let note = if missing > 0 {
        format!(" ({missing} instances absent)")
    } else {
        String::new()
    };
    Verdict::Pass(format!("{}{note}", lines.join("; ")))
}

fn relative_speed() -> Verdict {
    let instance = match find_instance(&workspace_instances(), "dsjc250.5") {
        Some(path) => InstanceSpec::File(path),
        None => InstanceSpec::Gnp { n: 250, p: 0.5 },
    };
    let cfg = RunConfig {
        algorithms: vec![Algorithm::Wfcc, Algorithm::Dsatur, Algorithm::Rlf],
        instances: vec![instance.clone()],
        repetitions: 100,
        seed: 1,
        timeout: None,
        ..RunConfig::default()
    };
    let rows = match run_bench(&cfg) {
        Ok(rows) => rows,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    let mean = |alg| {
        rows.iter()
            .find(|r| r.algorithm == alg)
            .and_then(|r| r.time_mean_us)
            .unwrap()
    };
    let (w, d, r) = (
        mean(Algorithm::Wfcc),
        mean(Algorithm::Dsatur),
        mean(Algorithm::Rlf),
    );
    let ratios: Vec<String> = speed_ratios(&rows)
        .into_iter()
        .map(|(alg, x)| format!("{alg}/wfcc {x:.1}x"))
        .collect();
    let detail = format!(
        "{instance}: mean wfcc {w:.3}us, dsatur {d:.3}us, rlf {r:.3}us [{}]",
        ratios.join(", ")
    );
    if w < d && w < r {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn termination_and_cliques() -> Verdict {
    for n in 2..=8 {
        let g = complete_graph(n);
        let r = wfcc::solve(&g, &WfccConfig::default());
        if r.k != n {
            return Verdict::Fail(format!("K{n}: k={}", r.k));
        }
        if let Err(e) = wfcc_bounds(&g, &r) {
            return Verdict::Fail(format!("K{n}: {e}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7E5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=80);
        let g = random_gnp(n, rng.gen_range(0.0..1.0), rng.gen()).unwrap();
        for propagation in [PropagationMode::AllNeighbors, PropagationMode::EntropyAboveOne] {
            for tie_break in [TieBreak::HighestDegree, TieBreak::Random] {
                let cfg = WfccConfig {
                    tie_break,
                    propagation,
                    seed: rng.gen(),
                };
                let r = wfcc::solve(&g, &cfg);
                if let Err(e) = wfcc_bounds(&g, &r) {
                    return Verdict::Fail(e);
                }
            }
        }
    }
    Verdict::Pass("K2..K8 give k=n; restarts <= n and final M <= n on every solve".into())
}

/// The k and restart columns of a CSV report.
fn k_restart_columns(csv: &str) -> Vec<String> {
    parse_csv(csv)
        .unwrap()
        .into_iter()
        .map(|r| format!("{},{},{:?},{:?}", r.instance, r.algorithm, r.k, r.restarts))
        .collect()
}

fn determinism() -> Verdict {
    let base = RunConfig {
        algorithms: Algorithm::ALL.to_vec(),
        instances: vec![
            InstanceSpec::Crown(6),
            InstanceSpec::Gnp { n: 80, p: 0.3 },
            InstanceSpec::Gnp { n: 120, p: 0.6 },
        ],
        repetitions: 3,
        seed: 42,
        options: SolverOptions {
            wfcc: WfccConfig {
                tie_break: TieBreak::Random,
                ..WfccConfig::default()
            },
            ..SolverOptions::default()
        },
        ..RunConfig::default()
    };
    let parallel = RunConfig {
        jobs: 3,
        ..base.clone()
    };
    let runs: Vec<String> = [&base, &base, &parallel]
        .iter()
        .map(|cfg| render_report(&run_bench(cfg).unwrap(), ReportFormat::Csv))
        .collect();
    let cols: Vec<Vec<String>> = runs.iter().map(|csv| k_restart_columns(csv)).collect();
    if cols[0] != cols[1] || cols[0] != cols[2] {
        return Verdict::Fail(format!("{:?}\nvs\n{:?}\nvs\n{:?}", cols[0], cols[1], cols[2]));
    }
    Verdict::Pass(format!("{} rows identical across 3 runs (jobs 1, 1, 3)", cols[0].len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("validity suite", validity_suite),
        ("crown-graph claim", crown_claim),
        ("oracle dominance and tightness", oracle_dominance),
        ("propagation equivalence", propagation_equivalence),
        ("DIMACS table reproduction", dimacs_reproduction),
        ("relative speed", relative_speed),
        ("termination and bound", termination_and_cliques),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Verdict::Pass(detail) => println!("PASS  {name}: {detail}"),
            Verdict::Skip(detail) => println!("SKIP  {name}: {detail}"),
            Verdict::Fail(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
