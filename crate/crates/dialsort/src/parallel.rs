//! Parallel ingestion: partitioned tallying with additive histogram merging.
//!
//! Each worker owns a contiguous block of the input and a private histogram,
//! so no write is ever shared and no atomics are needed. After all workers
//! finish, the private histograms are merged cell-wise — the software
//! analogue of the CRN's additive reduction — and a single ordered projection
//! produces the output. The result is byte-identical to the sequential sort
//! for every input and worker count.

use crate::error::{Error, Result};
use crate::histogram::{Histogram, Universe};
use std::ops::Range;
use std::thread;

/// Contiguous block decomposition of an input of `n` keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPlan {
    worker_count: usize,
    ranges: Vec<Range<usize>>,
}

impl PartitionPlan {
    pub fn worker_count(&self) -> usize {
        self.worker_count
    }

    /// Disjoint ranges covering `[0, n)` in order; trailing ranges may be
    /// empty.
    pub fn ranges(&self) -> &[Range<usize>] {
        &self.ranges
    }
}

/// Splits `[0, n)` into `worker_count` contiguous blocks of at most
/// `⌈n / worker_count⌉` keys each.
pub fn partition(n: usize, worker_count: usize) -> Result<PartitionPlan> {
    if worker_count == 0 {
        return Err(Error::ZeroWorkers);
    }
    let chunk = n.div_ceil(worker_count).max(1);
    let ranges = (0..worker_count)
        .map(|w| {
            let start = (w * chunk).min(n);
            let end = ((w + 1) * chunk).min(n);
            start..end
        })
        .collect();
    Ok(PartitionPlan {
        worker_count,
        ranges,
    })
}

/// Cell-wise sum of histograms over the same universe.
pub fn merge_histograms(parts: &[Histogram]) -> Result<Histogram> {
    let first = parts.first().ok_or(Error::ZeroWorkers)?;
    let universe = first.universe();
    let mut merged = Histogram::new(universe)?;
    for part in parts {
        if part.universe() != universe {
            return Err(Error::UniverseMismatch {
                left: universe.size(),
                right: part.universe().size(),
            });
        }
        for (key, &count) in part.counts().iter().enumerate() {
            if count > 0 {
                merged.add(key as u32, count)?;
            }
        }
    }
    Ok(merged)
}

/// Sorts `keys` using `worker_count` concurrent ingestion workers.
///
/// Workers tally disjoint blocks into private histograms; a barrier (thread
/// join) precedes the merge; merging and projection run on the calling
/// thread. Output is identical to [`sort`](crate::sort) on the same input.
pub fn parallel_sort(keys: &mut [u32], universe: Universe, worker_count: usize) -> Result<()> {
    let plan = partition(keys.len(), worker_count)?;
    let shared: &[u32] = keys;

    let parts: Vec<Result<Histogram>> = thread::scope(|scope| {
        let handles: Vec<_> = plan
            .ranges()
            .iter()
            .map(|range| {
                let block = &shared[range.clone()];
                let offset = range.start;
                scope.spawn(move || -> Result<Histogram> {
                    let mut local = Histogram::new(universe)?;
                    local.ingest(block).map_err(|e| match e {
                        // report positions relative to the whole input
                        Error::KeyOutOfRange {
                            key,
                            index: Some(i),
                            universe,
                        } => Error::KeyOutOfRange {
                            key,
                            index: Some(offset + i),
                            universe,
                        },
                        other => other,
                    })?;
                    Ok(local)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("ingestion worker panicked"))
            .collect()
    });

    let mut histograms = Vec::with_capacity(parts.len());
    for (worker, part) in parts.into_iter().enumerate() {
        match part {
            Ok(h) => histograms.push(h),
            Err(source) => {
                return Err(Error::WorkerFailed {
                    worker,
                    source: Box::new(source),
                })
            }
        }
    }

    let merged = merge_histograms(&histograms)?;
    merged.project_in_place(keys)
}
