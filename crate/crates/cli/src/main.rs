use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use wfcc_core::bench::{
    bundled_best_known, load_best_known, load_instance, render_report, run_bench, speed_ratios,
    InstanceSpec, ReportFormat, RunConfig,
};
use wfcc_core::dimacs::{parse_coloring, write_coloring};
use wfcc_core::{
    run_algorithm, validate, Algorithm, Deadline, PropagationMode, RlfTieBreak, SaturationMode,
    SolverOptions, TieBreak, WfccConfig,
};

#[derive(Parser)]
#[command(name = "wfcc", version, about = "Vertex coloring heuristics and benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time algorithms over DIMACS files and generated graphs.
    Bench(BenchArgs),
    /// Color one graph and print or save the coloring.
    Color(ColorArgs),
    /// Check a coloring file against a graph; exit status 1 if improper.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieBreakArg {
    Degree,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropagationArg {
    /// Restrict every uncolored neighbor.
    All,
    /// Restrict only neighbors with more than one color left.
    Guarded,
}

#[derive(Clone, Copy, ValueEnum)]
enum SaturationArg {
    Distinct,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum RlfTiesArg {
    Random,
    LowestId,
}

#[derive(clap::Args)]
struct SolverArgs {
    /// Seed for random tie-breaking and generated graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// WFC-C minimum-entropy tie-break.
    #[arg(long, value_enum, default_value = "degree")]
    tie_break: TieBreakArg,
    /// WFC-C propagation rule.
    #[arg(long, value_enum, default_value = "all")]
    propagation: PropagationArg,
    /// DSatur saturation definition.
    #[arg(long, value_enum, default_value = "distinct")]
    saturation: SaturationArg,
    /// RLF tie-break.
    #[arg(long, value_enum, default_value = "random")]
    rlf_ties: RlfTiesArg,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            wfcc: WfccConfig {
                tie_break: match self.tie_break {
                    TieBreakArg::Degree => TieBreak::HighestDegree,
                    TieBreakArg::Random => TieBreak::Random,
                },
                propagation: match self.propagation {
                    PropagationArg::All => PropagationMode::AllNeighbors,
                    PropagationArg::Guarded => PropagationMode::EntropyAboveOne,
                },
                seed: self.seed,
            },
            saturation: match self.saturation {
                SaturationArg::Distinct => SaturationMode::DistinctColors,
                SaturationArg::Count => SaturationMode::ColoredNeighbors,
            },
            rlf_ties: match self.rlf_ties {
                RlfTiesArg::Random => RlfTieBreak::Random,
                RlfTiesArg::LowestId => RlfTieBreak::LowestId,
            },
            seed: self.seed,
            ..SolverOptions::default()
        }
    }
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Comma-separated algorithms: wfcc, ig, dsatur, rlf.
    #[arg(long, value_delimiter = ',', default_value = "wfcc,ig,dsatur,rlf")]
    alg: Vec<Algorithm>,
    /// DIMACS .col files.
    #[arg(long, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Generated instance: crown:<n> or gnp:<n>,<p>. Repeatable.
    #[arg(long = "gen")]
    generate: Vec<InstanceSpec>,
    #[arg(long, default_value_t = 100)]
    reps: usize,
    /// Per-solve limit in milliseconds; slower runs are reported as N/A.
    #[arg(long, default_value_t = 60_000)]
    timeout_ms: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `<instance> <k*>` table; defaults to the bundled DIMACS values.
    #[arg(long)]
    best_known: Option<PathBuf>,
    /// Worker threads across instances. 1 runs everything serially.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(clap::Args)]
struct ColorArgs {
    #[arg(long, default_value = "wfcc")]
    alg: Algorithm,
    #[arg(long)]
    input: PathBuf,
    /// Coloring file (`<vertex> <color>` per line); stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(clap::Args)]
struct ValidateArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
}

fn bench(args: BenchArgs) -> Result<()> {
    let mut instances: Vec<InstanceSpec> =
        args.input.into_iter().map(InstanceSpec::File).collect();
    instances.extend(args.generate);
    if instances.is_empty() {
        bail!("no instances: pass --input and/or --gen");
    }
    let best_known = match &args.best_known {
        Some(path) => load_best_known(path)?,
        None => bundled_best_known(),
    };
    let format = match args.format {
        Format::Csv => ReportFormat::Csv,
        Format::Md => ReportFormat::Markdown,
    };
    let cfg = RunConfig {
        algorithms: args.alg,
        instances,
        repetitions: args.reps,
        seed: args.solver.seed,
        timeout: Some(Duration::from_millis(args.timeout_ms)),
        options: args.solver.options(),
        best_known,
        format,
        output: args.out,
        jobs: args.jobs.max(1),
    };
    let rows = run_bench(&cfg)?;
    let report = render_report(&rows, cfg.format);
    match &cfg.output {
        Some(path) => std::fs::write(path, report)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{report}"),
    }
    for (alg, ratio) in speed_ratios(&rows) {
        eprintln!("mean time {alg} / wfcc: {ratio:.1}x");
    }
    Ok(())
}

fn color(args: ColorArgs) -> Result<()> {
    let g = load_instance(&args.input)?;
    let result = run_algorithm(args.alg, &g, &args.solver.options(), &Deadline::none())?;
    if let Err(v) = validate(&g, &result.coloring) {
        bail!("{} produced an improper coloring: {v}", args.alg);
    }
    eprintln!(
        "{}: k = {}, restarts = {}, {:.3} us",
        args.alg,
        result.k,
        result.restarts,
        result.elapsed.as_secs_f64() * 1e6
    );
    let text = write_coloring(&result.coloring);
    match args.out {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn check(args: ValidateArgs) -> Result<bool> {
    let g = load_instance(&args.input)?;
    let text = std::fs::read_to_string(&args.coloring)
        .with_context(|| format!("reading {}", args.coloring.display()))?;
    let coloring = parse_coloring(&text, g.vertex_count())
        .with_context(|| format!("parsing {}", args.coloring.display()))?;
    match validate(&g, &coloring) {
        Ok(()) => {
            println!("valid: {} colors", coloring.color_count());
            Ok(true)
        }
        Err(v) => {
            println!("invalid: {v}");
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Bench(args) => bench(args).map(|()| true),
        Command::Color(args) => color(args).map(|()| true),
        Command::Validate(args) => check(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
