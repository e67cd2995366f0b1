//! Cycle-accurate simulator of the conflict resolution network.
//!
//! The network is a reduction tree of depth `⌈log₂ k⌉` over `k` ingestion
//! lanes. Each lane carries a `(key, count)` pair per cycle; tree nodes test
//! keys for *equality only* and fuse equal keys additively, so the histogram
//! receives at most one write per distinct key per cycle. No magnitude
//! relation between keys is ever evaluated.
//!
//! Two merge disciplines are simulated:
//!
//! * [`MergeMode::Pairwise`] — each level groups the surviving items into
//!   consecutive pairs; a pair with equal keys fuses into one item, a pair
//!   with distinct keys is forwarded unchanged, and an odd residual item is
//!   forwarded as-is. Non-adjacent equal keys can slip through to the final
//!   level (see `[a,b,a,b]`), which is why this mode does not guarantee
//!   per-key uniqueness at the output.
//! * [`MergeMode::Multiset`] (default) — the levels form a binary tree over
//!   the lanes and each node merges its two child item-sets key-wise, so
//!   every node output carries at most one item per key and uniqueness holds
//!   at the final level.
//!
//! Both disciplines preserve the per-key count sum at every level, which is
//! what [`conservation_check`] verifies.

use crate::error::{Error, Result};
use crate::histogram::{Histogram, Universe};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One lane's state for one cycle: a key and the count it contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaneItem {
    pub key: u32,
    pub count: u64,
}

impl LaneItem {
    /// A lane item always contributes at least one occurrence.
    pub fn new(key: u32, count: u64) -> Self {
        assert!(count >= 1, "lane item count must be at least 1");
        LaneItem { key, count }
    }
}

/// The multiset of lane states entering the network at one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaneBatch {
    pub items: Vec<LaneItem>,
    pub cycle_index: u64,
}

impl LaneBatch {
    /// One unit-count item per key, in lane order (the base formulation).
    pub fn from_keys(keys: &[u32], cycle_index: u64) -> Self {
        LaneBatch {
            items: keys.iter().map(|&k| LaneItem::new(k, 1)).collect(),
            cycle_index,
        }
    }

    /// Like [`from_keys`](Self::from_keys) but runs of consecutive equal keys
    /// are accumulated inside their lane before entering the network. An
    /// optimisation, not required for correctness.
    pub fn from_keys_accumulated(keys: &[u32], cycle_index: u64) -> Self {
        let mut items: Vec<LaneItem> = Vec::new();
        for &key in keys {
            match items.last_mut() {
                Some(last) if last.key == key => last.count += 1,
                _ => items.push(LaneItem::new(key, 1)),
            }
        }
        LaneBatch { items, cycle_index }
    }
}

/// How tree nodes combine the items that reach them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergeMode {
    /// Literal adjacent pairing per level; no uniqueness guarantee.
    Pairwise,
    /// Key-wise merge of child item-sets; final level has at most one item
    /// per key.
    #[default]
    Multiset,
}

/// Per-level snapshots of one batch's traversal, level 0 = network input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrnTrace {
    levels: Vec<Vec<LaneItem>>,
    lane_count: usize,
}

impl CrnTrace {
    /// All level snapshots; `levels()[0]` is the input, the last entry the
    /// output written to histogram memory.
    pub fn levels(&self) -> &[Vec<LaneItem>] {
        &self.levels
    }

    pub fn lane_count(&self) -> usize {
        self.lane_count
    }

    /// Number of level transitions: `⌈log₂ lane_count⌉`.
    pub fn depth(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    /// Items leaving the final level.
    pub fn output(&self) -> &[LaneItem] {
        self.levels.last().expect("trace has at least one level")
    }

    /// Line-oriented dump: one level per line, `key:count` items separated by
    /// spaces, levels separated by `--` lines.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, level) in self.levels.iter().enumerate() {
            if i > 0 {
                out.push_str("--\n");
            }
            let mut first = true;
            for item in level {
                if !first {
                    out.push(' ');
                }
                write!(out, "{}:{}", item.key, item.count).unwrap();
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

/// Applies one level transition to a flat item list.
///
/// In pairwise mode this is the literal per-level rule: adjacent pairs fuse
/// on key equality, forward otherwise, odd residual forwarded. In multiset
/// mode the whole list is treated as the child item-sets arriving at one tree
/// node and is merged key-wise, yielding at most one item per key.
pub fn level_transition(items: &[LaneItem], mode: MergeMode) -> Vec<LaneItem> {
    match mode {
        MergeMode::Pairwise => {
            let mut next = Vec::with_capacity(items.len());
            let mut chunks = items.chunks_exact(2);
            for pair in &mut chunks {
                if pair[0].key == pair[1].key {
                    next.push(LaneItem::new(pair[0].key, pair[0].count + pair[1].count));
                } else {
                    next.push(pair[0]);
                    next.push(pair[1]);
                }
            }
            next.extend_from_slice(chunks.remainder());
            next
        }
        MergeMode::Multiset => merge_by_key(items),
    }
}

/// Key-wise merge preserving first-appearance order.
fn merge_by_key(items: &[LaneItem]) -> Vec<LaneItem> {
    let mut merged: Vec<LaneItem> = Vec::with_capacity(items.len());
    for item in items {
        match merged.iter_mut().find(|m| m.key == item.key) {
            Some(existing) => existing.count += item.count,
            None => merged.push(*item),
        }
    }
    merged
}

/// Network latency in cycles: `⌈log₂ lane_count⌉`, 0 for a single lane.
pub fn crn_latency(lane_count: usize) -> Result<u32> {
    if lane_count == 0 {
        return Err(Error::ZeroLanes);
    }
    let floor = lane_count.ilog2();
    Ok(if lane_count.is_power_of_two() {
        floor
    } else {
        floor + 1
    })
}

/// Runs one batch through all `⌈log₂ lane_count⌉` levels and records every
/// intermediate level.
///
/// # Panics
///
/// Panics if `lane_count` is zero or the batch holds more items than lanes.
pub fn run_crn(batch: &LaneBatch, lane_count: usize, mode: MergeMode) -> CrnTrace {
    assert!(lane_count >= 1, "lane count must be at least 1");
    assert!(
        batch.items.len() <= lane_count,
        "batch of {} items does not fit {} lanes",
        batch.items.len(),
        lane_count
    );
    let depth = crn_latency(lane_count).expect("lane_count >= 1");
    let mut levels = Vec::with_capacity(depth as usize + 1);
    levels.push(batch.items.clone());

    match mode {
        MergeMode::Pairwise => {
            for _ in 0..depth {
                let next = level_transition(levels.last().unwrap(), MergeMode::Pairwise);
                levels.push(next);
            }
        }
        MergeMode::Multiset => {
            // Tree nodes; every group output holds at most one item per key.
            let mut groups: Vec<Vec<LaneItem>> =
                batch.items.iter().map(|&item| vec![item]).collect();
            for _ in 0..depth {
                let mut next: Vec<Vec<LaneItem>> = Vec::with_capacity(groups.len().div_ceil(2));
                let mut pairs = groups.chunks_exact(2);
                for pair in &mut pairs {
                    let mut combined = pair[0].clone();
                    combined.extend_from_slice(&pair[1]);
                    next.push(level_transition(&combined, MergeMode::Multiset));
                }
                if let [residual] = pairs.remainder() {
                    next.push(residual.clone());
                }
                levels.push(next.iter().flatten().copied().collect());
                groups = next;
            }
        }
    }

    CrnTrace { levels, lane_count }
}

/// True iff for every key the count sum is identical across consecutive
/// levels of the trace.
pub fn conservation_check(trace: &CrnTrace) -> bool {
    fn key_sums(level: &[LaneItem]) -> BTreeMap<u32, u128> {
        let mut sums = BTreeMap::new();
        for item in level {
            *sums.entry(item.key).or_insert(0u128) += u128::from(item.count);
        }
        sums
    }
    trace
        .levels
        .windows(2)
        .all(|pair| key_sums(&pair[0]) == key_sums(&pair[1]))
}

/// Cycle accounting for one simulated ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineReport {
    /// Cycles to ingest the whole stream: `⌈n/k⌉ + ⌈log₂ k⌉`.
    pub total_cycles: u64,
    /// Cycles spent filling the pipeline before outputs flow: the depth.
    pub fill_cycles: u64,
    /// Batches advanced at steady rate: `⌈n/k⌉`.
    pub steady_batches: u64,
    /// The model bound `⌈n/k⌉ + ⌈log₂ k⌉`; equals `total_cycles` in this
    /// idealized model.
    pub model_bound: u64,
}

/// A configured ingestion pipeline: `lane_count` lanes in front of a CRN.
#[derive(Debug, Clone, Copy)]
pub struct Pipeline {
    lane_count: usize,
    mode: MergeMode,
    local_accumulation: bool,
}

impl Pipeline {
    /// # Panics
    ///
    /// Panics if `lane_count` is zero.
    pub fn new(lane_count: usize) -> Self {
        assert!(lane_count >= 1, "lane count must be at least 1");
        Pipeline {
            lane_count,
            mode: MergeMode::default(),
            local_accumulation: false,
        }
    }

    pub fn mode(mut self, mode: MergeMode) -> Self {
        self.mode = mode;
        self
    }

    /// Enables per-lane accumulation of consecutive equal keys before the
    /// batch enters the network. Off by default.
    pub fn local_accumulation(mut self, enabled: bool) -> Self {
        self.local_accumulation = enabled;
        self
    }

    /// Cuts `stream` into `⌈n/k⌉` batches, runs each through the network,
    /// and applies the final-level items additively to a fresh histogram.
    ///
    /// The returned histogram is identical to a sequential
    /// [`Histogram::ingest`] of the same stream; the report carries the cycle
    /// model `total_cycles = ⌈n/k⌉ + ⌈log₂ k⌉`.
    pub fn simulate(&self, stream: &[u32], universe: Universe) -> Result<(Histogram, PipelineReport)> {
        let mut histogram = Histogram::new(universe)?;
        let depth = u64::from(crn_latency(self.lane_count)?);
        let mut batches = 0u64;
        for (cycle, chunk) in stream.chunks(self.lane_count).enumerate() {
            let batch = if self.local_accumulation {
                LaneBatch::from_keys_accumulated(chunk, cycle as u64)
            } else {
                LaneBatch::from_keys(chunk, cycle as u64)
            };
            let trace = run_crn(&batch, self.lane_count, self.mode);
            for item in trace.output() {
                histogram.add(item.key, item.count)?;
            }
            batches += 1;
        }
        let report = PipelineReport {
            total_cycles: batches + depth,
            fill_cycles: depth,
            steady_batches: batches,
            model_bound: batches + depth,
        };
        Ok((histogram, report))
    }
}

/// Convenience wrapper over [`Pipeline::simulate`] with accumulation off.
pub fn pipeline_simulate(
    stream: &[u32],
    universe: Universe,
    lane_count: usize,
    mode: MergeMode,
) -> Result<(Histogram, PipelineReport)> {
    Pipeline::new(lane_count).mode(mode).simulate(stream, universe)
}
