//! Sequential sort over a bounded universe of integer keys.
//!
//! The central object is the [`Histogram`]: a per-key multiplicity array over
//! `[0, U)`. Ingestion increments `counts[key]` once per key — each key is its
//! own address, so no two keys are ever order-compared. The histogram is the
//! canonical ordered state: frequency, presence, and range queries read it
//! directly, and the sorted array is recovered on demand by a monotone sweep
//! that emits key `k` exactly `counts[k]` times.
//!
//! ```
//! use dialsort::{sort, Universe};
//!
//! let universe = Universe::new(6).unwrap();
//! let mut keys = vec![3, 1, 3, 5, 1, 3, 5, 3];
//! sort(&mut keys, universe).unwrap();
//! assert_eq!(keys, [1, 1, 3, 3, 3, 3, 5, 5]);
//! ```

use crate::error::{Error, Result};

/// Hard ceiling on universe size: 2^32 cells.
pub const MAX_UNIVERSE: u64 = 1 << 32;

/// The bounded key domain `[0, size)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    size: u64,
}

impl Universe {
    /// Creates a universe of `size` representable keys.
    ///
    /// Rejects `size == 0` (undefined domain) and sizes above
    /// [`MAX_UNIVERSE`].
    pub fn new(size: u64) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        if size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { size });
        }
        Ok(Universe { size })
    }

    /// Number of representable keys; valid keys occupy `[0, size)`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Whether `key` lies inside the universe.
    pub fn contains(&self, key: u32) -> bool {
        u64::from(key) < self.size
    }
}

/// Per-key multiplicity array over a [`Universe`], plus a cached total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    universe: Universe,
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    /// Allocates a zeroed histogram over `universe`.
    ///
    /// Allocation is fallible: an oversized universe yields
    /// [`Error::AllocationFailed`] instead of aborting.
    pub fn new(universe: Universe) -> Result<Self> {
        let cells = universe.size as usize;
        let mut counts = Vec::new();
        counts
            .try_reserve_exact(cells)
            .map_err(|_| Error::AllocationFailed {
                cells: universe.size,
            })?;
        counts.resize(cells, 0);
        Ok(Histogram {
            universe,
            counts,
            total: 0,
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// The multiplicity array, one cell per key.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of ingested keys (cached sum of all cells).
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Tallies `keys` into the histogram: `counts[k] += 1` per key.
    ///
    /// Keys are used directly as addresses; no order comparison between keys
    /// occurs. On error the cells for keys preceding the offending index have
    /// already been counted.
    pub fn ingest(&mut self, keys: &[u32]) -> Result<()> {
        let universe = self.universe.size;
        for (index, &key) in keys.iter().enumerate() {
            let cell = self
                .counts
                .get_mut(key as usize)
                .ok_or(Error::KeyOutOfRange {
                    key,
                    index: Some(index),
                    universe,
                })?;
            *cell = cell.checked_add(1).ok_or(Error::CountOverflow { key })?;
            self.total += 1;
        }
        Ok(())
    }

    /// Adds `count` occurrences of `key` in one step.
    ///
    /// This is the additive write the CRN and histogram merging rely on.
    pub fn add(&mut self, key: u32, count: u64) -> Result<()> {
        let universe = self.universe.size;
        let cell = self
            .counts
            .get_mut(key as usize)
            .ok_or(Error::KeyOutOfRange {
                key,
                index: None,
                universe,
            })?;
        *cell = cell
            .checked_add(count)
            .ok_or(Error::CountOverflow { key })?;
        self.total = self
            .total
            .checked_add(count)
            .ok_or(Error::CountOverflow { key })?;
        Ok(())
    }

    /// Writes the ordered projection into `buffer`: one forward pass over the
    /// universe emitting key `k` exactly `counts[k]` times.
    ///
    /// `buffer` must hold exactly [`total`](Self::total) keys. Nothing is
    /// allocated; the caller's buffer is the output.
    pub fn project_in_place(&self, buffer: &mut [u32]) -> Result<()> {
        let expected = self.total as usize;
        if buffer.len() != expected {
            return Err(Error::BufferSizeMismatch {
                expected,
                actual: buffer.len(),
            });
        }
        let mut written = 0;
        for (key, &count) in self.counts.iter().enumerate() {
            let count = count as usize;
            buffer[written..written + count].fill(key as u32);
            written += count;
        }
        debug_assert_eq!(written, expected);
        Ok(())
    }

    /// Multiplicity of `key`. O(1); no projection involved.
    pub fn frequency(&self, key: u32) -> Result<u64> {
        self.counts
            .get(key as usize)
            .copied()
            .ok_or(Error::KeyOutOfRange {
                key,
                index: None,
                universe: self.universe.size,
            })
    }

    /// Whether `key` occurs at all. O(1) occupancy test on the cell.
    pub fn presence(&self, key: u32) -> Result<bool> {
        Ok(self.frequency(key)? > 0)
    }

    /// Total multiplicity over the inclusive key range `[lo, hi]`.
    pub fn range_count(&self, lo: u32, hi: u32) -> Result<u64> {
        if lo > hi || !self.universe.contains(hi) {
            return Err(Error::InvalidRange {
                lo,
                hi,
                universe: self.universe.size,
            });
        }
        Ok(self.counts[lo as usize..=hi as usize].iter().sum())
    }

    /// Ascending list of keys with nonzero count.
    pub fn support_set(&self) -> SupportSet {
        let members = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, _)| k as u32)
            .collect();
        SupportSet { members }
    }

    /// Recomputes the total from scratch and compares with the cached value.
    /// Test/debug aid for the `total = Σ counts[k]` invariant.
    pub fn verify_total(&self) -> bool {
        self.counts.iter().sum::<u64>() == self.total
    }
}

/// Ascending list of occupied keys: the distinct values present in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    members: Vec<u32>,
}

impl SupportSet {
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, key: u32) -> bool {
        self.members.binary_search(&key).is_ok()
    }

    /// The canonical embedding of the support into `[0, U)` is an
    /// order-isomorphism exactly when every key of the universe occurs.
    pub fn is_order_isomorphism(&self, universe: Universe) -> bool {
        self.members.len() as u64 == universe.size()
    }
}

/// Sorts `keys` nondecreasing: one tally pass, one projection pass, one sweep
/// over the universe. The multiset of keys is preserved and no order
/// comparison between keys is evaluated.
pub fn sort(keys: &mut [u32], universe: Universe) -> Result<()> {
    let mut histogram = Histogram::new(universe)?;
    histogram.ingest(keys)?;
    histogram.project_in_place(keys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const FIG_KEYS: [u32; 8] = [3, 1, 3, 5, 1, 3, 5, 3];

    fn fig_histogram() -> Histogram {
        let mut h = Histogram::new(Universe::new(6).unwrap()).unwrap();
        h.ingest(&FIG_KEYS).unwrap();
        h
    }

    /// Independent oracle: per-key tally without touching Histogram.
    fn brute_tally(keys: &[u32], universe: u64) -> Vec<u64> {
        let mut tally = vec![0u64; universe as usize];
        for &k in keys {
            tally[k as usize] += 1;
        }
        tally
    }

    #[test]
    fn new_zeroed() {
        let h = Histogram::new(Universe::new(6).unwrap()).unwrap();
        assert_eq!(h.counts(), &[0, 0, 0, 0, 0, 0]);
        assert_eq!(h.total(), 0);

        let h = Histogram::new(Universe::new(1).unwrap()).unwrap();
        assert_eq!(h.counts(), &[0]);

        let h = Histogram::new(Universe::new(65536).unwrap()).unwrap();
        assert_eq!(h.counts().len(), 65536);
        assert!(h.counts().iter().all(|&c| c == 0));
    }

    #[test]
    fn universe_bounds() {
        assert_eq!(Universe::new(0).unwrap_err(), Error::EmptyUniverse);
        assert_eq!(
            Universe::new(MAX_UNIVERSE + 1).unwrap_err(),
            Error::UniverseTooLarge {
                size: MAX_UNIVERSE + 1
            }
        );
        assert!(Universe::new(MAX_UNIVERSE).is_ok());
    }

    #[test]
    fn ingest_worked_example() {
        let h = fig_histogram();
        assert_eq!(h.counts(), &[0, 2, 0, 4, 0, 2]);
        assert_eq!(h.total(), 8);
        assert!(h.verify_total());
    }

    #[test]
    fn ingest_empty_is_noop() {
        let mut h = Histogram::new(Universe::new(4).unwrap()).unwrap();
        h.ingest(&[]).unwrap();
        assert_eq!(h.total(), 0);
        assert_eq!(h.counts(), &[0, 0, 0, 0]);
    }

    #[test]
    fn ingest_matches_brute_tally() {
        let mut rng = StdRng::seed_from_u64(7);
        let keys: Vec<u32> = (0..1000).map(|_| rng.gen_range(0..16)).collect();
        let mut h = Histogram::new(Universe::new(16).unwrap()).unwrap();
        h.ingest(&keys).unwrap();
        assert_eq!(h.counts(), brute_tally(&keys, 16).as_slice());
        assert!(h.verify_total());
    }

    #[test]
    fn ingest_rejects_out_of_range() {
        let mut h = Histogram::new(Universe::new(6).unwrap()).unwrap();
        let err = h.ingest(&[1, 2, 9, 3]).unwrap_err();
        assert_eq!(
            err,
            Error::KeyOutOfRange {
                key: 9,
                index: Some(2),
                universe: 6
            }
        );
    }

    #[test]
    fn ingest_detects_count_overflow() {
        let mut h = Histogram::new(Universe::new(2).unwrap()).unwrap();
        h.add(1, u64::MAX).unwrap();
        assert_eq!(h.ingest(&[1]).unwrap_err(), Error::CountOverflow { key: 1 });
    }

    #[test]
    fn project_worked_example() {
        let h = fig_histogram();
        let mut buf = vec![0u32; 8];
        h.project_in_place(&mut buf).unwrap();
        assert_eq!(buf, [1, 1, 3, 3, 3, 3, 5, 5]);
    }

    #[test]
    fn project_abacus_example() {
        // counts {1, 2, 0, 3, 1, 2} over U=6
        let mut h = Histogram::new(Universe::new(6).unwrap()).unwrap();
        for (key, count) in [(0, 1), (1, 2), (2, 0), (3, 3), (4, 1), (5, 2)] {
            h.add(key, count).unwrap();
        }
        let mut buf = vec![0u32; 9];
        h.project_in_place(&mut buf).unwrap();
        assert_eq!(buf, [0, 1, 1, 3, 3, 3, 4, 5, 5]);
    }

    #[test]
    fn project_empty() {
        let h = Histogram::new(Universe::new(6).unwrap()).unwrap();
        let mut buf: Vec<u32> = vec![];
        h.project_in_place(&mut buf).unwrap();
        assert!(buf.is_empty());
    }

    #[test]
    fn project_rejects_wrong_length() {
        let h = fig_histogram();
        let mut buf = vec![0u32; 5];
        assert_eq!(
            h.project_in_place(&mut buf).unwrap_err(),
            Error::BufferSizeMismatch {
                expected: 8,
                actual: 5
            }
        );
    }

    #[test]
    fn sort_worked_example() {
        let mut keys = FIG_KEYS.to_vec();
        sort(&mut keys, Universe::new(6).unwrap()).unwrap();
        assert_eq!(keys, [1, 1, 3, 3, 3, 3, 5, 5]);
    }

    #[test]
    fn sort_idempotent_on_sorted_input() {
        let mut keys = vec![0, 0, 1, 2, 2, 5, 7];
        let before = keys.clone();
        sort(&mut keys, Universe::new(8).unwrap()).unwrap();
        assert_eq!(keys, before);
    }

    #[test]
    fn sort_matches_stdlib_oracle() {
        let mut rng = StdRng::seed_from_u64(20260321);
        for _ in 0..500 {
            let u = if rng.gen_bool(0.5) { 16 } else { 256 };
            let n = rng.gen_range(0..=4096);
            let mut keys: Vec<u32> = (0..n).map(|_| rng.gen_range(0..u)).collect();
            let mut expected = keys.clone();
            expected.sort_unstable();
            sort(&mut keys, Universe::new(u64::from(u)).unwrap()).unwrap();
            assert_eq!(keys, expected);
        }
    }

    #[test]
    fn sort_propagates_range_error_without_projection() {
        let mut keys = vec![1, 2, 9];
        let err = sort(&mut keys, Universe::new(6).unwrap()).unwrap_err();
        assert!(matches!(err, Error::KeyOutOfRange { key: 9, .. }));
        assert_eq!(keys, [1, 2, 9], "buffer untouched on failed ingest");
    }

    #[test]
    fn frequency_queries() {
        let h = fig_histogram();
        assert_eq!(h.frequency(3).unwrap(), 4);
        assert_eq!(h.frequency(0).unwrap(), 0);
        assert!(matches!(
            h.frequency(6).unwrap_err(),
            Error::KeyOutOfRange { key: 6, .. }
        ));

        let fresh = Histogram::new(Universe::new(6).unwrap()).unwrap();
        for k in 0..6 {
            assert_eq!(fresh.frequency(k).unwrap(), 0);
        }
    }

    #[test]
    fn frequency_matches_recount() {
        let mut rng = StdRng::seed_from_u64(11);
        let keys: Vec<u32> = (0..800).map(|_| rng.gen_range(0..32)).collect();
        let mut h = Histogram::new(Universe::new(32).unwrap()).unwrap();
        h.ingest(&keys).unwrap();
        let oracle = brute_tally(&keys, 32);
        for k in 0..32u32 {
            assert_eq!(h.frequency(k).unwrap(), oracle[k as usize]);
        }
    }

    #[test]
    fn presence_queries() {
        let h = fig_histogram();
        assert!(!h.presence(2).unwrap());
        assert!(h.presence(5).unwrap());
        let fresh = Histogram::new(Universe::new(6).unwrap()).unwrap();
        for k in 0..6 {
            assert!(!fresh.presence(k).unwrap());
        }
    }

    #[test]
    fn range_count_queries() {
        let h = fig_histogram();
        assert_eq!(h.range_count(0, 5).unwrap(), 8);
        assert_eq!(h.range_count(3, 5).unwrap(), 6);
        assert_eq!(h.range_count(2, 2).unwrap(), 0);
        assert!(matches!(
            h.range_count(4, 2).unwrap_err(),
            Error::InvalidRange { lo: 4, hi: 2, .. }
        ));
        assert!(matches!(
            h.range_count(0, 6).unwrap_err(),
            Error::InvalidRange { hi: 6, .. }
        ));
    }

    #[test]
    fn support_set_worked_example() {
        let h = fig_histogram();
        let support = h.support_set();
        assert_eq!(support.members(), &[1, 3, 5]);
        assert!(!support.is_order_isomorphism(h.universe()));
    }

    #[test]
    fn support_set_full_occupancy_is_isomorphism() {
        let mut h = Histogram::new(Universe::new(4).unwrap()).unwrap();
        h.ingest(&[0, 1, 2, 3]).unwrap();
        let support = h.support_set();
        assert_eq!(support.members(), &[0, 1, 2, 3]);
        assert!(support.is_order_isomorphism(h.universe()));
    }

    #[test]
    fn support_set_matches_filter_oracle() {
        let mut rng = StdRng::seed_from_u64(23);
        let keys: Vec<u32> = (0..64).map(|_| rng.gen_range(0..128)).collect();
        let mut h = Histogram::new(Universe::new(128).unwrap()).unwrap();
        h.ingest(&keys).unwrap();
        let oracle: Vec<u32> = brute_tally(&keys, 128)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, _)| k as u32)
            .collect();
        let support = h.support_set();
        assert_eq!(support.members(), oracle.as_slice());
        assert!(support.members().windows(2).all(|w| w[0] < w[1]));
        for k in 0..128u32 {
            assert_eq!(h.presence(k).unwrap(), support.contains(k));
        }
    }

    #[test]
    fn total_tracks_repeated_ingests() {
        let mut h = Histogram::new(Universe::new(10).unwrap()).unwrap();
        h.ingest(&[1, 2, 3]).unwrap();
        h.ingest(&[3, 3]).unwrap();
        h.ingest(&[]).unwrap();
        assert_eq!(h.total(), 5);
        assert!(h.verify_total());
        assert_eq!(h.range_count(0, 9).unwrap(), h.total());
    }
}
