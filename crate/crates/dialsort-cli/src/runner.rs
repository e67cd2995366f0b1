//! Sweep execution: timing, verification, and record assembly.

use crate::gen::{gen_distribution, DistKind, DistributionSpec};
use crate::stats::{Stats, TimingProtocol};
use clap::ValueEnum;
use dialsort::{baselines, from_ordered_unsigned, parallel_sort, radix_sort, sort, Result};
use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

/// Algorithms the harness can drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Histogram ingest + in-place ordered projection.
    Dialsort,
    /// Partitioned ingest with private histograms, additive merge.
    DsParallel,
    /// LSD base-256 radix over the full signed 32-bit range.
    DsRadix,
    /// Classic three-phase counting sort baseline.
    ClassicCs,
    /// The standard library's unstable sort.
    Std,
    /// Deliberately wrong result; exists so tests can exercise the
    /// verification-failure path. Not selectable from the command line.
    #[doc(hidden)]
    #[value(skip)]
    Broken,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Dialsort,
        Algorithm::DsParallel,
        Algorithm::DsRadix,
        Algorithm::ClassicCs,
        Algorithm::Std,
    ];

    /// Whether the algorithm can take full signed 32-bit range inputs.
    pub fn accepts_full_range(self) -> bool {
        matches!(self, Algorithm::DsRadix | Algorithm::Std)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algorithm::Dialsort => "dialsort",
            Algorithm::DsParallel => "ds-parallel",
            Algorithm::DsRadix => "ds-radix",
            Algorithm::ClassicCs => "classic-cs",
            Algorithm::Std => "std",
            Algorithm::Broken => "broken",
        };
        f.write_str(name)
    }
}

/// Sweep-wide knobs.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub protocol: TimingProtocol,
    /// Worker count for `ds-parallel`; other algorithms ignore it.
    pub threads: usize,
    /// Verify sortedness and multiset preservation after every run.
    pub verify: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            protocol: TimingProtocol::default(),
            threads: 8,
            verify: true,
        }
    }
}

/// One measured (algorithm, configuration) row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub distribution: DistKind,
    pub n: usize,
    pub u: u64,
    pub threads: usize,
    pub best_ms: f64,
    pub mean_ms: f64,
    pub std_ms: f64,
    pub cv_pct: f64,
    /// `n / best_ms / 1000`: million keys per second at the best run.
    pub throughput_mkeys: f64,
    /// Best std time divided by this row's best time, when a `std` row for
    /// the same (distribution, n, u) exists in the record set.
    pub speedup_vs_std: Option<f64>,
    pub verified: bool,
}

/// Benchmarks one algorithm on one configuration.
///
/// The input is regenerated from the spec's seed before every run so the
/// timed region covers only the sort itself; verification compares against a
/// once-computed sorted oracle after every run, warmup included.
///
/// # Panics
///
/// Panics if a full-range spec is paired with an algorithm that only handles
/// bounded universes.
pub fn bench_one(
    algorithm: Algorithm,
    spec: &DistributionSpec,
    config: &RunConfig,
) -> Result<BenchRecord> {
    assert!(
        algorithm.accepts_full_range() || !spec.is_full_range(),
        "{algorithm} requires a bounded universe"
    );
    let signed = spec.is_full_range() || algorithm == Algorithm::DsRadix;
    let (times, verified) = if signed {
        run_signed(algorithm, spec, config)?
    } else {
        run_unsigned(algorithm, spec, config)?
    };

    let stats = Stats::from_times_ms(&times);
    let throughput_mkeys = if stats.best_ms > 0.0 {
        spec.n as f64 / stats.best_ms / 1000.0
    } else {
        0.0
    };
    Ok(BenchRecord {
        algorithm,
        distribution: spec.kind,
        n: spec.n,
        u: spec.universe.size(),
        threads: if algorithm == Algorithm::DsParallel {
            config.threads
        } else {
            1
        },
        best_ms: stats.best_ms,
        mean_ms: stats.mean_ms,
        std_ms: stats.std_ms,
        cv_pct: stats.cv_pct,
        throughput_mkeys,
        speedup_vs_std: None,
        verified,
    })
}

fn run_unsigned(
    algorithm: Algorithm,
    spec: &DistributionSpec,
    config: &RunConfig,
) -> Result<(Vec<f64>, bool)> {
    let universe = spec.universe;
    let oracle = config.verify.then(|| {
        let mut sorted = gen_distribution(spec);
        sorted.sort_unstable();
        sorted
    });

    let protocol = config.protocol;
    let mut times = Vec::with_capacity(protocol.measured_runs);
    let mut verified = true;
    for run in 0..protocol.warmup_runs + protocol.measured_runs {
        let mut keys = gen_distribution(spec);
        let start = Instant::now();
        match algorithm {
            Algorithm::Dialsort => sort(&mut keys, universe)?,
            Algorithm::DsParallel => parallel_sort(&mut keys, universe, config.threads)?,
            Algorithm::ClassicCs => baselines::classic_counting_sort(&mut keys, universe)?,
            Algorithm::Std => baselines::stdlib_sort(&mut keys),
            Algorithm::Broken => {
                sort(&mut keys, universe)?;
                if let [first, ..] = keys.as_mut_slice() {
                    *first = first.wrapping_add(1);
                }
            }
            Algorithm::DsRadix => unreachable!("radix runs on the signed path"),
        }
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        if run >= protocol.warmup_runs {
            times.push(elapsed_ms);
        }
        if let Some(expected) = &oracle {
            verified &= keys == *expected;
        }
    }
    Ok((times, verified))
}

fn run_signed(
    algorithm: Algorithm,
    spec: &DistributionSpec,
    config: &RunConfig,
) -> Result<(Vec<f64>, bool)> {
    let full_range = spec.is_full_range();
    let generate = || -> Vec<i32> {
        let raw = gen_distribution(spec);
        if full_range {
            // the unsigned draw space maps order-preservingly onto i32
            raw.into_iter().map(from_ordered_unsigned).collect()
        } else {
            raw.into_iter().map(|k| k as i32).collect()
        }
    };
    let oracle = config.verify.then(|| {
        let mut sorted = generate();
        sorted.sort_unstable();
        sorted
    });

    let protocol = config.protocol;
    let mut times = Vec::with_capacity(protocol.measured_runs);
    let mut verified = true;
    for run in 0..protocol.warmup_runs + protocol.measured_runs {
        let mut keys = generate();
        let start = Instant::now();
        match algorithm {
            Algorithm::DsRadix => radix_sort(&mut keys)?,
            Algorithm::Std => baselines::stdlib_sort(&mut keys),
            other => unreachable!("{other} does not take signed keys"),
        }
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        if run >= protocol.warmup_runs {
            times.push(elapsed_ms);
        }
        if let Some(expected) = &oracle {
            verified &= keys == *expected;
        }
    }
    Ok((times, verified))
}

/// Runs every (spec, algorithm) pair, fills `speedup_vs_std`, and returns the
/// records. A verification failure marks its record and is reflected in
/// [`exit_code`]; the sweep always completes.
pub fn run_benchmark(
    algorithms: &[Algorithm],
    specs: &[DistributionSpec],
    config: &RunConfig,
) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::with_capacity(algorithms.len() * specs.len());
    for spec in specs {
        for &algorithm in algorithms {
            records.push(bench_one(algorithm, spec, config)?);
        }
    }
    fill_speedups(&mut records);
    Ok(records)
}

/// Computes `speedup_vs_std` for every record that shares a
/// (distribution, n, u) configuration with a `std` record.
pub fn fill_speedups(records: &mut [BenchRecord]) {
    let std_best: HashMap<(DistKind, usize, u64), f64> = records
        .iter()
        .filter(|r| r.algorithm == Algorithm::Std)
        .map(|r| ((r.distribution, r.n, r.u), r.best_ms))
        .collect();
    for record in records.iter_mut() {
        record.speedup_vs_std = std_best
            .get(&(record.distribution, record.n, record.u))
            .and_then(|&std_ms| (record.best_ms > 0.0).then(|| std_ms / record.best_ms));
    }
}

/// True iff every record passed verification.
pub fn all_verified(records: &[BenchRecord]) -> bool {
    records.iter().all(|r| r.verified)
}

/// Process exit code for a completed sweep: 0 clean, 1 on any verification
/// failure.
pub fn exit_code(records: &[BenchRecord]) -> i32 {
    if all_verified(records) {
        0
    } else {
        1
    }
}
