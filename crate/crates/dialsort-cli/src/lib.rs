//! Benchmark harness for the `dialsort` crate: deterministic input
//! generation, a warmup/best-of-N timing protocol with post-run verification,
//! and CSV emission. The `dialsort-cli` binary is a thin front end over this
//! library.

pub mod csv;
pub mod gen;
pub mod runner;
pub mod stats;

pub use csv::{clock_resolution_ns, write_csv, CSV_HEADER};
pub use gen::{
    gen_distribution, heavy_draw_count, heavy_range_top, DistKind, DistributionSpec, SplitMix64,
    DEFAULT_SEED, FULL_RANGE_UNIVERSE,
};
pub use runner::{
    all_verified, bench_one, exit_code, fill_speedups, run_benchmark, Algorithm, BenchRecord,
    RunConfig,
};
pub use stats::{Stats, TimingProtocol};
