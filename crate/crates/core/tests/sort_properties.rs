use assoc_sort::baselines::oracle_sort;
use assoc_sort::word::{TaggedWord, MAX_PAYLOAD, TAG_BIT};
use assoc_sort::*;
use proptest::prelude::*;

/// Checks every per-pass and per-report invariant, returning the report.
fn sort_and_check(values: &[u64]) -> SortReport {
    let mut sorted = values.to_vec();
    let report = assoc_sort(&mut sorted).unwrap();
    assert_eq!(sorted, oracle_sort(values));
    assert_eq!(report.n, values.len());
    assert_eq!(report.accounted(), values.len());
    assert!(report.residual <= 1);
    for (t, pass) in report.passes.iter().enumerate() {
        assert_eq!(pass.n_d + pass.n_c + pass.n_d_prime, pass.n);
        assert!(pass.n_d >= 1);
        match pass.delta_prime {
            Some(next) => {
                assert!(pass.n_d_prime > 0);
                assert!(next >= pass.delta + pass.n as u64);
            }
            None => assert_eq!(pass.n_d_prime, 0),
        }
        if let Some(following) = report.passes.get(t + 1) {
            assert_eq!(following.n, pass.n_d_prime);
            assert_eq!(following.start, pass.start + pass.emitted());
        }
    }
    report
}

fn spread(values: &[u64]) -> u64 {
    match (values.iter().min(), values.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo + 1,
        _ => 0,
    }
}

proptest! {
    #[test]
    fn sorts_like_oracle_small_range(values in prop::collection::vec(0u64..64, 0..300)) {
        sort_and_check(&values);
    }

    #[test]
    fn sorts_like_oracle_wide_range(values in prop::collection::vec(0..=MAX_PAYLOAD, 0..300)) {
        sort_and_check(&values);
    }

    #[test]
    fn sorts_like_oracle_offset_range(base in 0u64..1 << 62, values in prop::collection::vec(0u64..5000, 1..300)) {
        let shifted: Vec<u64> = values.iter().map(|v| v + base).collect();
        sort_and_check(&shifted);
    }

    #[test]
    fn narrow_inputs_take_one_pass(base in 0u64..1 << 40, values in prop::collection::vec(0u64..1000, 2..400)) {
        let n = values.len() as u64;
        let shifted: Vec<u64> = values.iter().map(|v| base + v % n).collect();
        let report = sort_and_check(&shifted);
        prop_assert_eq!(report.k(), 1);
    }

    #[test]
    fn total_work_is_bounded(values in prop::collection::vec(0u64..20_000, 1..400)) {
        let report = sort_and_check(&values);
        let n = values.len() as f64;
        let beta = spread(&values) as f64 / n;
        prop_assert!(report.work() as f64 <= (beta + 1.0) * n + n);
    }

    #[test]
    fn full_universe_matches_oracle(values in prop::collection::vec(any::<u64>(), 0..300)) {
        let mut sorted = values.clone();
        let report = sort_full_universe(&mut sorted).unwrap();
        prop_assert_eq!(&sorted, &oracle_sort(&values));
        prop_assert_eq!(report.split, values.iter().filter(|&&v| v < TAG_BIT).count());
    }

    #[test]
    fn pass_phases_keep_tag_accounting(values in prop::collection::vec(0u64..500, 1..300)) {
        let mut buf: Vec<TaggedWord> = values.iter().copied().map(TaggedWord::from_bits).collect();
        let delta = find_min(&buf).unwrap();
        let stats = practice(&mut buf, delta);
        let tags: Vec<bool> = buf.iter().map(|w| w.is_tagged()).collect();
        prop_assert_eq!(tags.iter().filter(|&&t| t).count(), stats.n_d);
        store_records(&mut buf, stats.n_d);
        prop_assert_eq!(&buf.iter().map(|w| w.is_tagged()).collect::<Vec<_>>(), &tags);
        let record_sum: u64 = buf[..stats.n_d].iter().map(|w| w.payload()).sum();
        prop_assert_eq!(record_sum, stats.n_c as u64);
        partition_idle(&mut buf, &stats);
        prop_assert_eq!(&buf.iter().map(|w| w.is_tagged()).collect::<Vec<_>>(), &tags);
        let end = stats.n_d + stats.n_c;
        prop_assert!(buf[stats.n_d..end].iter().all(|w| hash_index(w.payload(), delta, buf.len()).is_some()));
        prop_assert!(buf[end..].iter().all(|w| hash_index(w.payload(), delta, buf.len()).is_none()));
        retrieve(&mut buf, &stats);
        prop_assert!(buf.iter().all(|w| !w.is_tagged()));
        let prefix: Vec<u64> = buf[..end].iter().map(|w| w.bits()).collect();
        let mut expected: Vec<u64> = values.iter().copied().filter(|&v| v - delta < values.len() as u64).collect();
        expected.sort_unstable();
        prop_assert_eq!(prefix, expected);
    }
}

#[test]
fn worst_case_chain_one_element_per_pass() {
    for n in [2usize, 3, 4, 10, 100, 1000] {
        let values = generate(&WorkloadSpec::new(WorkloadKind::WorstCase, n, 1, n as u64)).unwrap();
        let report = sort_and_check(&values);
        assert_eq!(report.k(), n - 1, "n = {n}");
        assert!(report.passes.iter().all(|p| p.emitted() == 1));
    }
}

#[test]
fn chain_of_four_stats() {
    let mut values = vec![0, 4, 7, 9];
    let report = assoc_sort(&mut values).unwrap();
    let rows: Vec<_> = report.passes.iter().map(|p| (p.start, p.n, p.delta, p.n_d, p.n_c, p.n_d_prime)).collect();
    assert_eq!(rows, vec![(0, 4, 0, 1, 0, 3), (1, 3, 4, 1, 0, 2), (2, 2, 7, 1, 0, 1)]);
}

#[test]
fn uniform_large_matches_oracle() {
    let values = generate(&WorkloadSpec::new(WorkloadKind::Uniform, 100_000, 200_000, 8)).unwrap();
    let report = sort_and_check(&values);
    assert!((report.k() as f64 - 100_000f64.log2()).abs() <= 4.0, "k = {}", report.k());
}

#[test]
fn uniform_with_small_range_is_one_pass() {
    let values = generate(&WorkloadSpec::new(WorkloadKind::Uniform, 100_000, 100_000, 3)).unwrap();
    assert_eq!(sort_and_check(&values).k(), 1);
}

#[test]
fn full_universe_random_words() {
    let values = generate(&WorkloadSpec::new(WorkloadKind::Uniform, 10_000, MAX_PAYLOAD + 1, 77)).unwrap();
    // spread over all 64 bits
    let values: Vec<u64> = values.iter().enumerate().map(|(i, v)| v ^ ((i as u64 & 1) << 63)).collect();
    let mut sorted = values.clone();
    sort_full_universe(&mut sorted).unwrap();
    assert_eq!(sorted, oracle_sort(&values));
}

#[test]
fn every_workload_kind_sorts() {
    for kind in WorkloadKind::ALL {
        for (n, m) in [(0, 1), (1, 1), (2, 3), (1000, 10), (1000, 1000), (1000, 100_000)] {
            let values = generate(&WorkloadSpec::new(kind, n, m, 5)).unwrap();
            sort_and_check(&values);
        }
    }
}

/// Pass count predicted by the average-case series for `m = beta * n`.
fn expected_passes(n: f64, beta: f64) -> f64 {
    (n.ln() - (beta - 1.0).ln()) / (beta.ln() - (beta - 1.0).ln())
}

#[test]
fn average_pass_count_tracks_series() {
    let n = 20_000usize;
    for beta in [2.0, 4.0, 10.0] {
        let m = (beta * n as f64) as u64;
        let ks: Vec<f64> = (0..10)
            .map(|seed| {
                let mut v = generate(&WorkloadSpec::new(WorkloadKind::Uniform, n, m, seed)).unwrap();
                assoc_sort(&mut v).unwrap().k() as f64
            })
            .collect();
        let mean = ks.iter().sum::<f64>() / ks.len() as f64;
        let expected = expected_passes(n as f64, beta);
        assert!((mean - expected).abs() <= 2.0, "beta {beta}: mean {mean}, expected {expected}");
    }
}

#[test]
fn write_counts_are_reported() {
    let mut values = vec![3, 1, 2, 1, 0];
    let report = assoc_sort(&mut values).unwrap();
    assert!(report.total_writes >= values.len() as u64);
    assert!((report.beta - 0.8).abs() < 1e-12);
}

#[test]
fn rejects_values_above_payload_bound() {
    let mut values = vec![1, MAX_PAYLOAD, MAX_PAYLOAD + 1];
    assert_eq!(assoc_sort(&mut values), Err(SortError::ValueOutOfRange { index: 2, value: MAX_PAYLOAD + 1 }));
    let mut values = vec![MAX_PAYLOAD, 0, MAX_PAYLOAD];
    sort_and_check(&values.clone());
    assoc_sort(&mut values).unwrap();
}

#[test]
fn independent_buffers_on_threads() {
    let handles: Vec<_> = (0..4u64)
        .map(|seed| {
            std::thread::spawn(move || {
                let values = generate(&WorkloadSpec::new(WorkloadKind::Uniform, 50_000, 150_000, seed)).unwrap();
                let mut sorted = values.clone();
                assoc_sort(&mut sorted).unwrap();
                sorted == oracle_sort(&values)
            })
        })
        .collect();
    assert!(handles.into_iter().all(|h| h.join().unwrap()));
}
