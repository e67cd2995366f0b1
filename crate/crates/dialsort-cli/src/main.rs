use clap::Parser;
use dialsort::{run_crn, LaneBatch, MergeMode};
use dialsort_cli::{
    exit_code, fill_speedups, write_csv, Algorithm, BenchRecord, DistKind, DistributionSpec,
    RunConfig, TimingProtocol, DEFAULT_SEED, FULL_RANGE_UNIVERSE,
};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

const ARGUMENT_ERROR: u8 = 2;

/// Benchmark harness for bounded-universe sorting.
///
/// Sweeps the requested algorithms over the requested input configurations,
/// times each with a warmup/best-of-N protocol, verifies every run, and
/// emits one CSV row per (algorithm, distribution, n, u) configuration.
/// ds-radix is benchmarked on full signed 32-bit range inputs (paired with
/// std when requested); the other algorithms use the bounded --u grid.
#[derive(Debug, Parser)]
#[command(name = "dialsort-cli", version, about)]
struct Cli {
    /// Algorithms to benchmark
    #[arg(
        long = "algo",
        value_enum,
        value_delimiter = ',',
        default_values_t = Algorithm::ALL
    )]
    algo: Vec<Algorithm>,

    /// Input distributions
    #[arg(
        long = "dist",
        value_enum,
        value_delimiter = ',',
        default_values_t = DistKind::ALL
    )]
    dist: Vec<DistKind>,

    /// Input sizes
    #[arg(
        long = "n",
        value_delimiter = ',',
        default_values_t = [10_000usize, 100_000, 1_000_000, 10_000_000]
    )]
    n: Vec<usize>,

    /// Universe sizes for the bounded algorithms
    #[arg(long = "u", value_delimiter = ',', default_values_t = [256u64, 1024, 65536])]
    u: Vec<u64>,

    /// Base seed; every (kind, n, u) configuration derives its own stream
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Measured runs per configuration
    #[arg(long, default_value_t = 7)]
    runs: usize,

    /// Discarded warmup runs per configuration
    #[arg(long, default_value_t = 3)]
    warmup: usize,

    /// Worker count for ds-parallel
    #[arg(long, default_value_t = 8)]
    threads: usize,

    /// Write the CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,

    /// Verify sortedness and multiset preservation after every run (default)
    #[arg(long, overrides_with = "no_verify")]
    verify: bool,

    /// Skip verification, for profiling only
    #[arg(long)]
    no_verify: bool,

    /// Print a CRN trace for a small demonstration batch and exit
    #[arg(long)]
    trace: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.trace {
        print_demo_trace();
        return ExitCode::SUCCESS;
    }

    if let Err(message) = validate(&cli) {
        eprintln!("error: {message}");
        return ExitCode::from(ARGUMENT_ERROR);
    }

    let config = RunConfig {
        protocol: TimingProtocol::new(cli.warmup, cli.runs),
        threads: cli.threads,
        verify: !cli.no_verify,
    };

    let records = match run_sweep(&cli, &config) {
        Ok(records) => records,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(ARGUMENT_ERROR);
        }
    };

    if let Err(message) = emit(&records, cli.out.as_deref()) {
        eprintln!("error: {message}");
        return ExitCode::from(ARGUMENT_ERROR);
    }

    ExitCode::from(exit_code(&records) as u8)
}

fn validate(cli: &Cli) -> Result<(), String> {
    if cli.runs < 1 {
        return Err("--runs must be at least 1".into());
    }
    if cli.threads < 1 {
        return Err("--threads must be at least 1".into());
    }
    if cli.algo.is_empty() {
        return Err("--algo needs at least one algorithm".into());
    }
    if cli.dist.is_empty() {
        return Err("--dist needs at least one distribution".into());
    }
    for &u in &cli.u {
        dialsort::Universe::new(u).map_err(|e| format!("--u {u}: {e}"))?;
    }
    Ok(())
}

fn run_sweep(cli: &Cli, config: &RunConfig) -> dialsort::Result<Vec<BenchRecord>> {
    let bounded_algos: Vec<Algorithm> = cli
        .algo
        .iter()
        .copied()
        .filter(|a| *a != Algorithm::DsRadix)
        .collect();
    let full_range_algos: Vec<Algorithm> = cli
        .algo
        .iter()
        .copied()
        .filter(|a| a.accepts_full_range())
        .collect();

    let mut records = Vec::new();
    let mut run_grid = |algos: &[Algorithm], universes: &[u64]| -> dialsort::Result<()> {
        if algos.is_empty() {
            return Ok(());
        }
        for &kind in &cli.dist {
            for &n in &cli.n {
                for &u in universes {
                    let spec = DistributionSpec::new(kind, n, u, cli.seed)?;
                    for &algorithm in algos {
                        let record = dialsort_cli::bench_one(algorithm, &spec, config)?;
                        eprintln!(
                            "{} {} n={} u={}: best {:.3} ms{}",
                            record.algorithm,
                            record.distribution,
                            record.n,
                            record.u,
                            record.best_ms,
                            if record.verified {
                                ""
                            } else {
                                "  VERIFICATION FAILED"
                            }
                        );
                        records.push(record);
                    }
                }
            }
        }
        Ok(())
    };

    run_grid(&bounded_algos, &cli.u)?;
    // ds-radix rows always cover the full signed 32-bit range
    if cli.algo.contains(&Algorithm::DsRadix) {
        run_grid(&full_range_algos, &[FULL_RANGE_UNIVERSE])?;
    }
    fill_speedups(&mut records);
    Ok(records)
}

fn emit(records: &[BenchRecord], out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            let mut writer = BufWriter::new(file);
            write_csv(records, &mut writer)
                .and_then(|()| writer.flush())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            let stdout = io::stdout();
            write_csv(records, &mut stdout.lock()).map_err(|e| format!("cannot write CSV: {e}"))
        }
    }
}

fn print_demo_trace() {
    let keys = [3u32, 1, 3, 5, 1, 3, 5, 3];
    let batch = LaneBatch::from_keys(&keys, 0);
    let trace = run_crn(&batch, keys.len(), MergeMode::Multiset);
    print!("{}", trace.dump());
}
