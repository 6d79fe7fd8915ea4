//! Reference sorts: correctness oracles and benchmark competitors.
//!
//! None of these are in place. They exist to be compared against.

use std::fmt;
use std::str::FromStr;

use crate::error::BaselineError;

/// Default cap on the counting-sort table, `2^28` entries.
pub const COUNTING_TABLE_CAP: usize = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineKind {
    Comparison,
    Counting,
    RadixLsd,
    Bucket,
}

impl BaselineKind {
    pub const ALL: [BaselineKind; 4] =
        [BaselineKind::Comparison, BaselineKind::Counting, BaselineKind::RadixLsd, BaselineKind::Bucket];

    pub fn name(self) -> &'static str {
        match self {
            BaselineKind::Comparison => "comparison",
            BaselineKind::Counting => "counting",
            BaselineKind::RadixLsd => "radix_lsd",
            BaselineKind::Bucket => "bucket",
        }
    }

    pub fn sort(self, values: &mut [u64]) -> Result<(), BaselineError> {
        match self {
            BaselineKind::Comparison => comparison_sort(values),
            BaselineKind::Counting => return counting_sort(values),
            BaselineKind::RadixLsd => radix_sort_lsd(values),
            BaselineKind::Bucket => bucket_sort(values),
        }
        Ok(())
    }
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaselineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BaselineKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown baseline `{s}`"))
    }
}

/// Sorted copy of `values`; the ground truth for differential tests.
pub fn oracle_sort(values: &[u64]) -> Vec<u64> {
    let mut sorted = values.to_vec();
    sorted.sort();
    sorted
}

/// Pattern-defeating quicksort from the standard library.
pub fn comparison_sort(values: &mut [u64]) {
    values.sort_unstable();
}

fn min_max(values: &[u64]) -> Option<(u64, u64)> {
    let first = *values.first()?;
    Some(values.iter().fold((first, first), |(lo, hi), &v| (lo.min(v), hi.max(v))))
}

/// Distribution counting sort with a `max - min + 1` table, capped at
/// [`COUNTING_TABLE_CAP`].
pub fn counting_sort(values: &mut [u64]) -> Result<(), BaselineError> {
    counting_sort_with_cap(values, COUNTING_TABLE_CAP)
}

pub fn counting_sort_with_cap(values: &mut [u64], cap: usize) -> Result<(), BaselineError> {
    let Some((lo, hi)) = min_max(values) else {
        return Ok(());
    };
    let range = (hi - lo) as u128 + 1;
    if range > cap as u128 {
        return Err(BaselineError::RangeTooLarge { range, cap });
    }
    let mut counts = vec![0usize; range as usize];
    for &v in values.iter() {
        counts[(v - lo) as usize] += 1;
    }
    let mut out = values.iter_mut();
    for (offset, &count) in counts.iter().enumerate() {
        let value = lo + offset as u64;
        for slot in out.by_ref().take(count) {
            *slot = value;
        }
    }
    Ok(())
}

/// LSD radix sort on 8-bit digits with an `n`-word scratch buffer. Digits
/// that are the same for every value are skipped.
pub fn radix_sort_lsd(values: &mut [u64]) {
    const DIGITS: usize = 8;
    let n = values.len();
    if n < 2 {
        return;
    }
    let mut histograms = [[0usize; 256]; DIGITS];
    for &v in values.iter() {
        for (d, hist) in histograms.iter_mut().enumerate() {
            hist[((v >> (8 * d)) & 0xFF) as usize] += 1;
        }
    }

    let mut scratch = vec![0u64; n];
    let mut in_scratch = false;
    for (d, hist) in histograms.iter().enumerate() {
        if hist.contains(&n) {
            continue;
        }
        let mut offsets = [0usize; 256];
        let mut sum = 0;
        for (o, &c) in offsets.iter_mut().zip(hist.iter()) {
            *o = sum;
            sum += c;
        }
        let (src, dst): (&[u64], &mut [u64]) =
            if in_scratch { (&scratch, values) } else { (values, &mut scratch) };
        for &v in src {
            let b = ((v >> (8 * d)) & 0xFF) as usize;
            dst[offsets[b]] = v;
            offsets[b] += 1;
        }
        in_scratch = !in_scratch;
    }
    if in_scratch {
        values.copy_from_slice(&scratch);
    }
}

/// Bucket sort with `n` buckets over `[min, max]`; value `v` goes to bucket
/// `floor((v - min) * n / m)`, buckets are insertion sorted.
pub fn bucket_sort(values: &mut [u64]) {
    let n = values.len();
    let Some((lo, hi)) = min_max(values) else {
        return;
    };
    let range = (hi - lo) as u128 + 1;
    let bucket_of = |v: u64| ((v - lo) as u128 * n as u128 / range) as usize;

    let mut starts = vec![0usize; n + 1];
    for &v in values.iter() {
        starts[bucket_of(v) + 1] += 1;
    }
    for b in 1..=n {
        starts[b] += starts[b - 1];
    }
    let mut scattered = vec![0u64; n];
    let mut fill = starts.clone();
    for &v in values.iter() {
        let b = bucket_of(v);
        scattered[fill[b]] = v;
        fill[b] += 1;
    }
    for b in 0..n {
        insertion_sort(&mut scattered[starts[b]..starts[b + 1]]);
    }
    values.copy_from_slice(&scattered);
}

fn insertion_sort(values: &mut [u64]) {
    for i in 1..values.len() {
        let v = values[i];
        let mut j = i;
        while j > 0 && values[j - 1] > v {
            values[j] = values[j - 1];
            j -= 1;
        }
        values[j] = v;
    }
}
