//! Deterministic input generation for the benchmark harness.
//!
//! All randomness comes from splitmix64 so the same spec produces the same
//! key sequence on every platform. Each (kind, n, u) configuration derives
//! its own stream from the base seed, and every algorithm sees the identical
//! input for a given configuration.

use clap::ValueEnum;
use dialsort::{Result, Universe};
use std::fmt;

/// Seed used by the default sweep.
pub const DEFAULT_SEED: u64 = 20260321;

/// Universe size that stands for the full signed 32-bit key range.
pub const FULL_RANGE_UNIVERSE: u64 = 1 << 32;

/// splitmix64: public-domain mixer, reproducible from its constants.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Draw below `bound`. The modulo bias is at most `bound / 2^64`,
    /// invisible for every bound this harness uses.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound >= 1);
        self.next_u64() % bound
    }
}

/// The splitmix64 output scramble.
fn mix64(z: u64) -> u64 {
    let z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Input distribution shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum DistKind {
    /// Independent draws over the whole universe.
    Uniform,
    /// 80% of keys from the lowest 5% of the universe, 20% from all of it.
    Skewed,
    /// Uniform draws arranged ascending.
    Sorted,
    /// Uniform draws arranged descending.
    Reverse,
}

impl DistKind {
    pub const ALL: [DistKind; 4] = [
        DistKind::Uniform,
        DistKind::Skewed,
        DistKind::Sorted,
        DistKind::Reverse,
    ];
}

impl fmt::Display for DistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DistKind::Uniform => "uniform",
            DistKind::Skewed => "skewed",
            DistKind::Sorted => "sorted",
            DistKind::Reverse => "reverse",
        };
        f.write_str(name)
    }
}

/// One generator configuration: what to draw, how much, and from where.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistributionSpec {
    pub kind: DistKind,
    pub n: usize,
    pub universe: Universe,
    pub seed: u64,
}

impl DistributionSpec {
    pub fn new(kind: DistKind, n: usize, universe_size: u64, seed: u64) -> Result<Self> {
        Ok(DistributionSpec {
            kind,
            n,
            universe: Universe::new(universe_size)?,
            seed,
        })
    }

    /// Whether this spec spans the full signed 32-bit range.
    pub fn is_full_range(&self) -> bool {
        self.universe.size() == FULL_RANGE_UNIVERSE
    }

    /// The per-configuration stream seed: base seed with kind, n, and u
    /// mixed in, so distinct configurations get independent streams.
    fn stream(&self) -> SplitMix64 {
        let mut state = self.seed;
        state = mix64(state ^ (self.kind as u64).wrapping_add(1));
        state = mix64(state ^ self.n as u64);
        state = mix64(state ^ self.universe.size());
        SplitMix64::new(state)
    }
}

/// Inclusive top key of the skewed distribution's heavy range: `⌊0.05·U⌋`.
pub fn heavy_range_top(universe_size: u64) -> u64 {
    universe_size / 20
}

/// Exact number of heavy-range draws in a skewed input of `n` keys: `⌊0.8·n⌋`.
pub fn heavy_draw_count(n: usize) -> usize {
    n * 4 / 5
}

/// Generates the key sequence for `spec`. Deterministic: the same spec
/// always yields the same sequence.
pub fn gen_distribution(spec: &DistributionSpec) -> Vec<u32> {
    let u = spec.universe.size();
    let mut rng = spec.stream();
    match spec.kind {
        DistKind::Uniform => draw_uniform(&mut rng, spec.n, u),
        DistKind::Skewed => {
            let heavy = heavy_draw_count(spec.n);
            let mut keys = Vec::with_capacity(spec.n);
            let heavy_bound = heavy_range_top(u) + 1;
            keys.extend((0..heavy).map(|_| rng.next_below(heavy_bound) as u32));
            keys.extend((0..spec.n - heavy).map(|_| rng.next_below(u) as u32));
            shuffle(&mut keys, &mut rng);
            keys
        }
        DistKind::Sorted => {
            let mut keys = draw_uniform(&mut rng, spec.n, u);
            keys.sort_unstable();
            keys
        }
        DistKind::Reverse => {
            let mut keys = draw_uniform(&mut rng, spec.n, u);
            keys.sort_unstable();
            keys.reverse();
            keys
        }
    }
}

fn draw_uniform(rng: &mut SplitMix64, n: usize, u: u64) -> Vec<u32> {
    (0..n).map(|_| rng.next_below(u) as u32).collect()
}

/// Fisher–Yates with the spec's own stream.
fn shuffle(keys: &mut [u32], rng: &mut SplitMix64) {
    for i in (1..keys.len()).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        keys.swap(i, j);
    }
}
