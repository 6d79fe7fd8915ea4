use super::phases::run_pass;
use super::{Probe, Recorder, SortReport, UniverseReport};
use crate::error::SortError;
use crate::word::{TaggedWord, MAX_LEN, MAX_PAYLOAD, TAG_BIT};

/// Minimum payload of a non-empty span.
pub fn find_min(buf: &[TaggedWord]) -> Result<u64, SortError> {
    buf.iter().map(|w| w.payload()).min().ok_or(SortError::Empty)
}

/// Single scan for `(min, max)`, rejecting values that collide with the tag.
fn bounds(buf: &[TaggedWord]) -> Result<(u64, u64), SortError> {
    let mut min = MAX_PAYLOAD;
    let mut max = 0;
    for (index, word) in buf.iter().enumerate() {
        if word.is_tagged() {
            return Err(SortError::ValueOutOfRange { index, value: word.bits() });
        }
        min = min.min(word.bits());
        max = max.max(word.bits());
    }
    if buf.is_empty() {
        return Err(SortError::Empty);
    }
    Ok((min, max))
}

fn check_len(len: usize) -> Result<(), SortError> {
    if len as u64 > MAX_LEN {
        return Err(SortError::TooLong { len });
    }
    Ok(())
}

/// Sorts `values` ascending in place and reports per-pass statistics.
///
/// Every value must be at most [`MAX_PAYLOAD`]; use [`sort_full_universe`]
/// for arbitrary 64-bit values.
pub fn assoc_sort(values: &mut [u64]) -> Result<SortReport, SortError> {
    let mut recorder = Recorder::default();
    let residual = assoc_sort_with(values, &mut recorder)?;
    let n = values.len();
    let beta = match (values.first(), values.last()) {
        (Some(&lo), Some(&hi)) => (hi - lo + 1) as f64 / n as f64,
        _ => 0.0,
    };
    Ok(SortReport { n, passes: recorder.passes, total_writes: recorder.writes, beta, residual })
}

/// Sorts `values` in place, reporting through `probe`. Returns the number of
/// trailing elements left without a pass (0 or 1).
///
/// Beside the buffer only a fixed set of counters is used; with
/// [`NoProbe`](super::NoProbe) nothing is allocated.
pub fn assoc_sort_with<P: Probe>(values: &mut [u64], mut probe: P) -> Result<usize, SortError> {
    check_len(values.len())?;
    if values.is_empty() {
        return Ok(0);
    }
    let buf = TaggedWord::cast_slice_mut(values);
    let (mut delta, _) = bounds(buf)?;
    let mut start = 0;
    while buf.len() - start > 1 {
        let stats = run_pass(&mut buf[start..], start, delta, &mut probe);
        start += stats.emitted();
        match stats.delta_prime {
            Some(next) => delta = next,
            None => break,
        }
    }
    Ok(buf.len() - start)
}

/// Sorts arbitrary 64-bit values in place.
///
/// The list is partitioned into values below `2^(w-1)` and the rest, the
/// upper part is shifted down by `2^(w-1)`, both parts are sorted
/// associatively, and the upper part is shifted back.
pub fn sort_full_universe(values: &mut [u64]) -> Result<UniverseReport, SortError> {
    check_len(values.len())?;
    let split = partition_at_tag(values);
    let (lower, upper) = values.split_at_mut(split);
    for v in upper.iter_mut() {
        *v -= TAG_BIT;
    }
    let lower_report = assoc_sort(lower)?;
    let upper_report = assoc_sort(upper)?;
    for v in upper.iter_mut() {
        *v += TAG_BIT;
    }
    Ok(UniverseReport { split, lower: lower_report, upper: upper_report })
}

/// Unstable in-place partition; returns the count of values below the tag bit.
fn partition_at_tag(values: &mut [u64]) -> usize {
    let (mut lo, mut hi) = (0, values.len());
    loop {
        while lo < hi && values[lo] < TAG_BIT {
            lo += 1;
        }
        while lo < hi && values[hi - 1] >= TAG_BIT {
            hi -= 1;
        }
        if lo >= hi {
            return lo;
        }
        values.swap(lo, hi - 1);
        lo += 1;
        hi -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_examples() {
        let buf: Vec<_> = [5u64, 9, 5, 5].into_iter().map(TaggedWord::from_bits).collect();
        assert_eq!(find_min(&buf), Ok(5));
        assert_eq!(find_min(&[TaggedWord::from_bits(0)]), Ok(0));
        assert_eq!(find_min(&[]), Err(SortError::Empty));
    }

    #[test]
    fn empty_and_singleton() {
        let mut empty: Vec<u64> = vec![];
        let report = assoc_sort(&mut empty).unwrap();
        assert_eq!(report, SortReport::default());

        let mut one = vec![9];
        let report = assoc_sort(&mut one).unwrap();
        assert_eq!(one, vec![9]);
        assert_eq!((report.k(), report.residual), (0, 1));
    }

    #[test]
    fn adversarial_chain_takes_one_element_per_pass() {
        let mut values = vec![9, 0, 7, 4];
        let report = assoc_sort(&mut values).unwrap();
        assert_eq!(values, vec![0, 4, 7, 9]);
        assert_eq!(report.k(), 3);
        for pass in &report.passes {
            assert_eq!((pass.n_d, pass.n_c), (1, 0));
        }
        assert_eq!(report.residual, 1);
        assert_eq!(report.accounted(), 4);
    }

    #[test]
    fn passes_chain_through_suffixes() {
        let mut values = vec![50, 3, 1, 2, 1, 0, 30, 31, 1000, 30];
        let report = assoc_sort(&mut values).unwrap();
        assert_eq!(values, vec![0, 1, 1, 2, 3, 30, 30, 31, 50, 1000]);
        for pair in report.passes.windows(2) {
            assert_eq!(pair[1].n, pair[0].n_d_prime);
            assert_eq!(pair[1].start, pair[0].start + pair[0].emitted());
            assert_eq!(Some(pair[1].delta), pair[0].delta_prime);
        }
        assert_eq!(report.accounted(), values.len());
    }

    #[test]
    fn rejects_tagged_values() {
        let mut values = vec![1, TAG_BIT + 1, 3];
        assert_eq!(assoc_sort(&mut values), Err(SortError::ValueOutOfRange { index: 1, value: TAG_BIT + 1 }));
    }

    #[test]
    fn full_universe_two_and_two() {
        let mut values = vec![TAG_BIT + 1, 3, TAG_BIT, 1];
        let report = sort_full_universe(&mut values).unwrap();
        assert_eq!(values, vec![1, 3, TAG_BIT, TAG_BIT + 1]);
        assert_eq!(report.split, 2);
    }

    #[test]
    fn full_universe_lower_only_matches_assoc() {
        let original = vec![8u64, 2, 2, 100, 7, 3];
        let mut a = original.clone();
        let mut b = original;
        let plain = assoc_sort(&mut a).unwrap();
        let universe = sort_full_universe(&mut b).unwrap();
        assert_eq!(a, b);
        assert_eq!(universe.lower, plain);
        assert_eq!(universe.upper.n, 0);
    }

    #[test]
    fn full_universe_extremes() {
        let mut values = vec![u64::MAX, 0, MAX_PAYLOAD, TAG_BIT, u64::MAX, 0];
        sort_full_universe(&mut values).unwrap();
        assert_eq!(values, vec![0, 0, MAX_PAYLOAD, TAG_BIT, u64::MAX, u64::MAX]);
    }
}
