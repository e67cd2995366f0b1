//! In-repo comparison algorithms for the benchmark harness.

use crate::error::{Error, Result};
use crate::histogram::Universe;

/// Classic three-phase counting sort: count, exclusive prefix sum, stable
/// scatter into a freshly allocated output array, copy back.
///
/// The scatter buffer and copy-back are kept deliberately — this baseline
/// measures the textbook shape, including its `O(n)` output allocation and
/// mandatory prefix-sum pass over all `U` cells.
pub fn classic_counting_sort(keys: &mut [u32], universe: Universe) -> Result<()> {
    let cells = universe.size() as usize;
    let mut counts = Vec::new();
    counts
        .try_reserve_exact(cells)
        .map_err(|_| Error::AllocationFailed {
            cells: universe.size(),
        })?;
    counts.resize(cells, 0usize);

    // phase 1: count
    for (index, &key) in keys.iter().enumerate() {
        match counts.get_mut(key as usize) {
            Some(cell) => *cell += 1,
            None => {
                return Err(Error::KeyOutOfRange {
                    key,
                    index: Some(index),
                    universe: universe.size(),
                })
            }
        }
    }

    // phase 2: exclusive prefix sum over all U cells
    let mut running = 0;
    for cell in counts.iter_mut() {
        let c = *cell;
        *cell = running;
        running += c;
    }

    // phase 3: stable scatter into a fresh output array, then copy back
    let mut output = Vec::new();
    output
        .try_reserve_exact(keys.len())
        .map_err(|_| Error::AllocationFailed {
            cells: keys.len() as u64,
        })?;
    output.resize(keys.len(), 0u32);
    for &key in keys.iter() {
        output[counts[key as usize]] = key;
        counts[key as usize] += 1;
    }
    keys.copy_from_slice(&output);
    Ok(())
}

/// The host language's standard unstable sort.
pub fn stdlib_sort<T: Ord>(keys: &mut [T]) {
    keys.sort_unstable();
}
