//! The associative sort: the four phases of one pass, the pass composition,
//! and the sequential driver.
//!
//! A pass over a buffer of `n` words with minimum `delta` runs
//!
//! 1. [`practice`]: every value `v` with `v - delta < n` is mapped to slot
//!    `v - delta`. The first occurrence turns that slot into a node with
//!    record 0; later occurrences only bump the record.
//! 2. [`store_records`]: node records are compacted to `buf[..n_d]` by
//!    payload-only swaps, so every tag stays where it was.
//! 3. [`partition_idle`]: the idle occurrences are gathered right after the
//!    records, in front of the out-of-interval values.
//! 4. [`retrieve`]: nodes are visited right to left and paired with records
//!    from `buf[n_d - 1]` downwards, expanding each value `record + 1` times
//!    into `buf[..n_d + n_c]` from the back.
//!
//! The out-of-interval values end up in `buf[n_d + n_c..]`, and the driver
//! repeats the pass there with the minimum collected during practice.

mod driver;
mod phases;

pub use driver::{assoc_sort, assoc_sort_with, find_min, sort_full_universe};
pub use phases::{partition_idle, practice, retrieve, sort_pass, store_records};

use crate::word::TaggedWord;

/// Counters gathered by one pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PassStats {
    /// Offset of the pass's sublist within the whole buffer.
    pub start: usize,
    /// Sublist length.
    pub n: usize,
    /// Minimum of the sublist.
    pub delta: u64,
    /// Distinct practiced values, i.e. nodes.
    pub n_d: usize,
    /// Idle occurrences over all nodes.
    pub n_c: usize,
    /// Values outside `[delta, delta + n)`, left for the next pass.
    pub n_d_prime: usize,
    /// Minimum of the out-of-interval values, `None` when there are none.
    pub delta_prime: Option<u64>,
}

impl PassStats {
    pub(crate) fn new(n: usize, delta: u64) -> Self {
        PassStats { start: 0, n, delta, n_d: 0, n_c: 0, n_d_prime: 0, delta_prime: None }
    }

    /// Elements placed in their final position by this pass.
    pub fn emitted(&self) -> usize {
        self.n_d + self.n_c
    }
}

/// Aggregate over all passes of one [`assoc_sort`] call.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SortReport {
    /// Length of the input.
    pub n: usize,
    pub passes: Vec<PassStats>,
    /// Word writes performed by the passes.
    pub total_writes: u64,
    /// `m / n` with `m = max - min + 1` of the input; 0 for empty input.
    pub beta: f64,
    /// Elements left over when the driver stopped: a trailing singleton is
    /// already in place and needs no pass. Either 0 or 1.
    pub residual: usize,
}

impl SortReport {
    /// Number of passes.
    pub fn k(&self) -> usize {
        self.passes.len()
    }

    /// Total number of elements scanned, summed over passes.
    pub fn work(&self) -> u64 {
        self.passes.iter().map(|p| p.n as u64).sum()
    }

    /// Elements emitted by the passes plus the residual; equals `n`.
    pub fn accounted(&self) -> usize {
        self.passes.iter().map(PassStats::emitted).sum::<usize>() + self.residual
    }
}

/// Report of [`sort_full_universe`]: the list is split at `2^(w-1)` and both
/// halves are sorted associatively.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct UniverseReport {
    /// Number of values below `2^(w-1)`; they occupy `buf[..split]`.
    pub split: usize,
    pub lower: SortReport,
    pub upper: SortReport,
}

impl UniverseReport {
    pub fn k(&self) -> usize {
        self.lower.k() + self.upper.k()
    }
}

/// Maps `value` to its slot in the practiced interval, or `None` when it
/// lies outside `[delta, delta + n)`. `value` must be at least `delta`.
#[inline(always)]
pub fn hash_index(value: u64, delta: u64, n: usize) -> Option<usize> {
    let j = value.wrapping_sub(delta);
    if j < n as u64 {
        Some(j as usize)
    } else {
        None
    }
}

/// Recovers the value represented by slot `position`.
#[inline(always)]
pub fn inverse_hash(position: usize, delta: u64) -> u64 {
    position as u64 + delta
}

/// Observer hooks called by the sort.
///
/// Every hook has an empty default, so `NoProbe` compiles away entirely.
/// `after_store` receives the segment mutably so tests can inject faults.
pub trait Probe {
    #[inline(always)]
    fn on_writes(&mut self, _count: u64) {}

    #[inline(always)]
    fn after_practice(&mut self, _segment: &[TaggedWord], _stats: &PassStats) {}

    #[inline(always)]
    fn after_store(&mut self, _segment: &mut [TaggedWord], _stats: &PassStats) {}

    #[inline(always)]
    fn after_pass(&mut self, _segment: &[TaggedWord], _stats: &PassStats) {}
}

/// A probe that records nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoProbe;

impl Probe for NoProbe {}

impl<P: Probe + ?Sized> Probe for &mut P {
    #[inline(always)]
    fn on_writes(&mut self, count: u64) {
        (**self).on_writes(count)
    }

    #[inline(always)]
    fn after_practice(&mut self, segment: &[TaggedWord], stats: &PassStats) {
        (**self).after_practice(segment, stats)
    }

    #[inline(always)]
    fn after_store(&mut self, segment: &mut [TaggedWord], stats: &PassStats) {
        (**self).after_store(segment, stats)
    }

    #[inline(always)]
    fn after_pass(&mut self, segment: &[TaggedWord], stats: &PassStats) {
        (**self).after_pass(segment, stats)
    }
}

/// Collects pass statistics and write counts into a [`SortReport`].
#[derive(Debug, Default)]
pub(crate) struct Recorder {
    pub(crate) passes: Vec<PassStats>,
    pub(crate) writes: u64,
}

impl Probe for Recorder {
    #[inline(always)]
    fn on_writes(&mut self, count: u64) {
        self.writes += count;
    }

    fn after_pass(&mut self, _segment: &[TaggedWord], stats: &PassStats) {
        self.passes.push(*stats);
    }
}
