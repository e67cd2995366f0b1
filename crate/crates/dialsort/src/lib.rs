//! Bounded-universe integer sorting built on the self-indexing principle:
//! a key in `[0, U)` is its own address, so sorting reduces to tallying keys
//! into a histogram and sweeping the address space in order. The histogram is
//! the canonical ordered state — frequency, presence, and range queries read
//! it directly, and a linear sorted array is only materialized on request.
//!
//! The crate provides:
//!
//! * [`sort`] / [`Histogram`] — the sequential two-pass sort and its query
//!   surface ([`histogram`]);
//! * [`crn`] — a cycle-accurate simulator of the conflict resolution network
//!   that merges same-cycle equal keys additively using equality tests only;
//! * [`parallel`] — multi-worker ingestion with private histograms and
//!   additive merging, byte-identical to the sequential sort;
//! * [`radix`] — an LSD base-256 extension covering the full signed 32-bit
//!   range;
//! * [`domain`] — sorting of any finite totally ordered domain through an
//!   order-isomorphism onto `[0, U)`;
//! * [`baselines`] — classic counting sort and the standard-library sort, for
//!   benchmarking.

pub mod baselines;
pub mod crn;
pub mod domain;
pub mod error;
pub mod histogram;
pub mod parallel;
pub mod radix;

pub use crn::{
    conservation_check, crn_latency, level_transition, pipeline_simulate, run_crn, CrnTrace,
    LaneBatch, LaneItem, MergeMode, Pipeline, PipelineReport,
};
pub use domain::{sort_domain, validate_codec, ByteCodec, DomainCodec};
pub use error::{Error, Result};
pub use histogram::{sort, Histogram, SupportSet, Universe, MAX_UNIVERSE};
pub use parallel::{merge_histograms, parallel_sort, partition, PartitionPlan};
pub use radix::{from_ordered_unsigned, radix_sort, to_ordered_unsigned};
