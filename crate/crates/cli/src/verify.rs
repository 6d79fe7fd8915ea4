//! Differential verification campaign.
//!
//! Each trial draws a workload, sorts it with the associative sort under an
//! invariant-checking probe, and compares the result with the oracle sort.
//! Trials are independent and run on a thread pool; results are merged in
//! trial order.

use std::fmt::Write as _;
use std::io::Write;

use assoc_sort::baselines::oracle_sort;
use assoc_sort::rng::{mix64, SplitMix64};
use assoc_sort::word::TaggedWord;
use assoc_sort::{assoc_sort_with, generate, PassStats, Probe, WorkloadKind, WorkloadSpec};
use rayon::prelude::*;

use crate::error::CliError;

/// Range-to-length ratios the campaign draws from.
pub const RATIOS: [f64; 6] = [0.01, 0.1, 1.0, 2.0, 10.0, 100.0];

/// The adversarial chain costs `n^2 / 2` element visits, so its length is
/// capped to keep a campaign bounded.
pub const WORST_CASE_MAX_N: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Flip one stored record per trial. Only for exercising the checker.
    #[doc(hidden)]
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 1000, max_n: 100_000, seed: 0, inject_fault: false }
    }
}

/// Measurements of one successful trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialStats {
    pub n: usize,
    pub k: usize,
    /// Sum of pass lengths.
    pub work: u64,
    /// `m / n` of the generated list.
    pub beta: f64,
}

impl TrialStats {
    /// `work / ((beta + 2) n)`; at most 1 when the total-work bound holds.
    pub fn work_ratio(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.work as f64 / ((self.beta + 2.0) * self.n as f64)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialFailure {
    pub index: usize,
    pub spec: WorkloadSpec,
    pub reason: String,
    /// Smallest failing workload found by halving `n`.
    pub minimal: WorkloadSpec,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub trials: usize,
    pub elements: u64,
    pub max_passes: usize,
    pub max_work_ratio: f64,
    /// Trials per workload kind, in `WorkloadKind::ALL` order.
    pub per_kind: [usize; 7],
    /// Trials per ratio, in `RATIOS` order.
    pub per_ratio: [usize; 6],
    pub failures: Vec<TrialFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Workload for trial `index` of a campaign, and the index of its ratio.
pub fn trial_spec(seed: u64, index: usize, max_n: usize) -> (WorkloadSpec, usize) {
    let mut rng = SplitMix64::new(seed ^ mix64(index as u64 + 1));
    let kind = WorkloadKind::ALL[rng.below(WorkloadKind::ALL.len() as u64) as usize];
    let ratio_index = rng.below(RATIOS.len() as u64) as usize;
    let mut n = if max_n == 0 {
        0
    } else if rng.below(16) == 0 {
        // degenerate lengths
        (rng.below(3) as usize).min(max_n)
    } else {
        // log-uniform in [1, max_n]
        let x = ((max_n as f64).ln() * rng.unit_f64()).exp();
        (x.round() as usize).clamp(1, max_n)
    };
    if kind == WorkloadKind::WorstCase {
        n = n.min(WORST_CASE_MAX_N);
    }
    let m = ((RATIOS[ratio_index] * n as f64).round() as u64).max(1);
    (WorkloadSpec::new(kind, n, m, rng.next_u64()), ratio_index)
}

/// Checks every pass invariant as the sort runs.
struct CheckingProbe {
    inject_fault: bool,
    violation: Option<String>,
    previous: Option<PassStats>,
    work: u64,
    emitted: usize,
    passes: usize,
}

impl CheckingProbe {
    fn new(inject_fault: bool) -> Self {
        CheckingProbe { inject_fault, violation: None, previous: None, work: 0, emitted: 0, passes: 0 }
    }

    fn fail(&mut self, stats: &PassStats, what: String) {
        if self.violation.is_none() {
            self.violation = Some(format!("pass {} at offset {}: {what}", self.passes + 1, stats.start));
        }
    }
}

fn count_tags(segment: &[TaggedWord]) -> usize {
    segment.iter().filter(|w| w.is_tagged()).count()
}

impl Probe for CheckingProbe {
    fn after_practice(&mut self, segment: &[TaggedWord], stats: &PassStats) {
        if stats.n_d + stats.n_c + stats.n_d_prime != stats.n {
            self.fail(stats, format!("n_d + n_c + n_d' = {} != n = {}", stats.n_d + stats.n_c + stats.n_d_prime, stats.n));
        }
        if stats.n > 0 && stats.n_d == 0 {
            self.fail(stats, "no node created".into());
        }
        let tags = count_tags(segment);
        if tags != stats.n_d {
            self.fail(stats, format!("{tags} tags after practice, expected n_d = {}", stats.n_d));
        }
        match stats.delta_prime {
            Some(next) if next < stats.delta + stats.n as u64 => {
                self.fail(stats, format!("delta' = {next} inside the practiced interval"))
            }
            None if stats.n_d_prime > 0 => self.fail(stats, "missing delta'".into()),
            _ => {}
        }
        if let Some(prev) = self.previous {
            if stats.n != prev.n_d_prime || stats.start != prev.start + prev.emitted() {
                self.fail(stats, format!("pass does not cover the previous remainder ({} vs {})", stats.n, prev.n_d_prime));
            }
        }
    }

    fn after_store(&mut self, segment: &mut [TaggedWord], stats: &PassStats) {
        if self.inject_fault && stats.n_d > 0 {
            segment[0] = segment[0].with_payload(segment[0].payload() ^ 1);
            self.inject_fault = false;
        }
        let records: u64 = segment[..stats.n_d].iter().map(|w| w.payload()).sum();
        if records != stats.n_c as u64 {
            self.fail(stats, format!("stored records sum to {records}, expected n_c = {}", stats.n_c));
        }
    }

    fn after_pass(&mut self, segment: &[TaggedWord], stats: &PassStats) {
        let tags = count_tags(segment);
        if tags != 0 {
            self.fail(stats, format!("{tags} tags left after retrieval"));
        }
        self.work += stats.n as u64;
        self.emitted += stats.emitted();
        self.passes += 1;
        self.previous = Some(*stats);
    }
}

/// Runs one workload through every check.
pub fn check_workload(spec: &WorkloadSpec, inject_fault: bool) -> Result<TrialStats, String> {
    let values = generate(spec).map_err(|e| e.to_string())?;
    let expected = oracle_sort(&values);
    let mut sorted = values;
    let mut probe = CheckingProbe::new(inject_fault);
    let residual = assoc_sort_with(&mut sorted, &mut probe).map_err(|e| e.to_string())?;
    if let Some(violation) = probe.violation {
        return Err(violation);
    }
    if let Some(i) = sorted.iter().zip(&expected).position(|(a, b)| a != b) {
        return Err(format!("output differs from oracle at index {i}: {} != {}", sorted[i], expected[i]));
    }
    let n = expected.len();
    if probe.emitted + residual != n {
        return Err(format!("passes emitted {} + residual {residual} elements of {n}", probe.emitted));
    }
    let beta = match (expected.first(), expected.last()) {
        (Some(lo), Some(hi)) => (hi - lo + 1) as f64 / n as f64,
        _ => 0.0,
    };
    let stats = TrialStats { n, k: probe.passes, work: probe.work, beta };
    if stats.work_ratio() > 1.0 {
        return Err(format!("total work {} exceeds (beta + 2) n = {:.1}", stats.work, (beta + 2.0) * n as f64));
    }
    Ok(stats)
}

fn shrink(spec: &WorkloadSpec, inject_fault: bool) -> WorkloadSpec {
    let mut smallest = *spec;
    let mut candidate = *spec;
    while candidate.n > 1 {
        let n = candidate.n / 2;
        let m = ((candidate.m as u128 * n as u128 / candidate.n as u128) as u64).max(1);
        candidate = WorkloadSpec { n, m, ..candidate };
        if check_workload(&candidate, inject_fault).is_err() {
            smallest = candidate;
        }
    }
    smallest
}

/// Runs the whole campaign.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let outcomes: Vec<_> = (0..cfg.trials)
        .into_par_iter()
        .map(|index| {
            let (spec, ratio) = trial_spec(cfg.seed, index, cfg.max_n);
            (index, spec, ratio, check_workload(&spec, cfg.inject_fault))
        })
        .collect();

    let mut report = VerifyReport { trials: cfg.trials, ..Default::default() };
    for (index, spec, ratio, outcome) in outcomes {
        report.per_ratio[ratio] += 1;
        report.per_kind[WorkloadKind::ALL.iter().position(|&k| k == spec.kind).unwrap()] += 1;
        match outcome {
            Ok(stats) => {
                report.elements += stats.n as u64;
                report.max_passes = report.max_passes.max(stats.k);
                report.max_work_ratio = report.max_work_ratio.max(stats.work_ratio());
            }
            Err(reason) => report.failures.push(TrialFailure {
                index,
                spec,
                reason,
                minimal: shrink(&spec, cfg.inject_fault),
            }),
        }
    }
    report
}

/// The `verify` command. Fails with a verification error on any mismatch.
pub fn cmd_verify(cfg: &VerifyConfig, out: &mut dyn Write) -> Result<VerifyReport, CliError> {
    let report = run_verify(cfg);
    let mut text = String::new();
    for failure in &report.failures {
        let _ = writeln!(text, "FAIL trial {} {}: {}", failure.index, failure.spec, failure.reason);
        let _ = writeln!(text, "  reproduce: assoc-sort trace {}", failure.minimal);
    }
    let _ = writeln!(
        text,
        "{} trials, {} elements, {} failures, max passes {}, max work ratio {:.4}",
        report.trials,
        report.elements,
        report.failures.len(),
        report.max_passes,
        report.max_work_ratio
    );
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))?;
    match report.failures.first() {
        None => Ok(report),
        Some(first) => Err(CliError::Verification(format!(
            "{} of {} trials failed, first: {}",
            report.failures.len(),
            report.trials,
            first.minimal
        ))),
    }
}
