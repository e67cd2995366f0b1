//! CSV emission for benchmark records.

use crate::runner::BenchRecord;
use std::io::{self, Write};
use std::time::Instant;

/// The exact column header.
pub const CSV_HEADER: &str =
    "algorithm,distribution,n,u,threads,best_ms,mean_ms,std_ms,cv_pct,throughput_mkeys,speedup_vs_std,verified";

/// Smallest positive delta observable between two monotonic clock reads.
pub fn clock_resolution_ns() -> u64 {
    let mut min = u64::MAX;
    for _ in 0..4096 {
        let a = Instant::now();
        let b = Instant::now();
        let delta = b.duration_since(a).as_nanos() as u64;
        if delta > 0 && delta < min {
            min = delta;
        }
    }
    if min == u64::MAX {
        1
    } else {
        min
    }
}

/// Writes a `# clock_ns_resolution=…` comment, the header, and one row per
/// record. Floating fields carry three decimal places; `speedup_vs_std` is
/// empty when no `std` row shares the configuration.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: &mut W) -> io::Result<()> {
    writeln!(out, "# clock_ns_resolution={}", clock_resolution_ns())?;
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        let speedup = r
            .speedup_vs_std
            .map(|s| format!("{s:.3}"))
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{:.3},{:.3},{:.3},{:.3},{:.3},{},{}",
            r.algorithm,
            r.distribution,
            r.n,
            r.u,
            r.threads,
            r.best_ms,
            r.mean_ms,
            r.std_ms,
            r.cv_pct,
            r.throughput_mkeys,
            speedup,
            r.verified
        )?;
    }
    Ok(())
}
