//! Timing harness.
//!
//! Every (algorithm, workload) cell is verified once against the oracle,
//! then timed over one warmup and `runs` measured repetitions, each on a
//! fresh copy of the workload. The median is reported.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use assoc_sort::baselines::oracle_sort;
use assoc_sort::{assoc_sort, assoc_sort_with, generate, BaselineKind, NoProbe, WorkloadKind, WorkloadSpec};

use crate::error::CliError;

pub const CSV_HEADER: &str = "algorithm,workload,n,m,runs,median_ns,k_passes,verified";

/// Length used by the `paper` grid.
pub const PAPER_N: usize = 1_000_000;

/// Range-to-length ratios of the `paper` grid.
pub const PAPER_RATIOS: [f64; 4] = [0.01, 0.1, 1.0, 10.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Assoc,
    Baseline(BaselineKind),
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Assoc,
        Algorithm::Baseline(BaselineKind::Comparison),
        Algorithm::Baseline(BaselineKind::RadixLsd),
        Algorithm::Baseline(BaselineKind::Bucket),
        Algorithm::Baseline(BaselineKind::Counting),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Assoc => "assoc",
            Algorithm::Baseline(kind) => kind.name(),
        }
    }

    /// Uninstrumented sort used for timing.
    fn sort(self, values: &mut [u64]) -> Result<(), CliError> {
        match self {
            Algorithm::Assoc => {
                assoc_sort_with(values, NoProbe)?;
            }
            Algorithm::Baseline(kind) => kind.sort(values)?,
        }
        Ok(())
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown algorithm `{s}`")))
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub algorithm: String,
    pub workload: String,
    pub n: usize,
    /// `max - min + 1` of the generated list.
    pub m: u64,
    pub runs: usize,
    pub median_ns: u64,
    /// Pass count for `assoc`, 0 otherwise.
    pub k_passes: usize,
    pub verified: bool,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.algorithm, self.workload, self.n, self.m, self.runs, self.median_ns, self.k_passes, self.verified
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub workloads: Vec<WorkloadSpec>,
    pub runs: usize,
    /// Keep only the low 32 bits of every generated value.
    pub mask32: bool,
}

/// Uniform workloads of length [`PAPER_N`] at each of [`PAPER_RATIOS`].
pub fn paper_grid(seed: u64) -> Vec<WorkloadSpec> {
    PAPER_RATIOS
        .iter()
        .map(|r| WorkloadSpec::new(WorkloadKind::Uniform, PAPER_N, (r * PAPER_N as f64) as u64, seed))
        .collect()
}

/// Parses `--grid`: either `paper` or a comma-separated list of workload tokens.
pub fn parse_grid(grid: &str, seed: u64) -> Result<Vec<WorkloadSpec>, CliError> {
    if grid == "paper" {
        return Ok(paper_grid(seed));
    }
    grid.split(',').map(|token| token.trim().parse().map_err(CliError::from)).collect()
}

pub fn median_ns(samples: &mut [u64]) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

fn workload_values(spec: &WorkloadSpec, mask32: bool) -> Result<Vec<u64>, CliError> {
    let mut values = generate(spec)?;
    if mask32 {
        for v in &mut values {
            *v &= 0xFFFF_FFFF;
        }
    }
    Ok(values)
}

/// Verifies and times one cell.
pub fn bench_cell(algorithm: Algorithm, spec: &WorkloadSpec, runs: usize, mask32: bool) -> Result<BenchRecord, CliError> {
    let values = workload_values(spec, mask32)?;
    bench_values(algorithm, &spec.to_string(), &values, runs)
}

pub fn bench_values(algorithm: Algorithm, label: &str, values: &[u64], runs: usize) -> Result<BenchRecord, CliError> {
    if values.is_empty() {
        return Err(CliError::Usage(format!("workload {label} is empty; nothing to time")));
    }
    if runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let expected = oracle_sort(values);
    let mut check = values.to_vec();
    let k_passes = match algorithm {
        Algorithm::Assoc => assoc_sort(&mut check)?.k(),
        Algorithm::Baseline(kind) => {
            kind.sort(&mut check)?;
            0
        }
    };
    if check != expected {
        return Err(CliError::Verification(format!("{algorithm} on {label} disagrees with the oracle")));
    }

    let mut samples = Vec::with_capacity(runs);
    for run in 0..=runs {
        let mut copy = values.to_vec();
        let start = Instant::now();
        algorithm.sort(&mut copy)?;
        let elapsed = start.elapsed().as_nanos().max(1) as u64;
        std::hint::black_box(&copy);
        if run > 0 {
            samples.push(elapsed);
        }
    }
    Ok(BenchRecord {
        algorithm: algorithm.name().to_owned(),
        workload: label.to_owned(),
        n: values.len(),
        m: expected[expected.len() - 1] - expected[0] + 1,
        runs,
        median_ns: median_ns(&mut samples),
        k_passes,
        verified: true,
    })
}

/// The `bench` command: writes the CSV header and one row per cell.
pub fn cmd_bench(cfg: &BenchConfig, out: &mut dyn Write) -> Result<Vec<BenchRecord>, CliError> {
    if let Some(empty) = cfg.workloads.iter().find(|w| w.n == 0) {
        return Err(CliError::Usage(format!("workload {empty} has n = 0; nothing to time")));
    }
    if cfg.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let io = |e| CliError::io("<bench output>", e);
    writeln!(out, "{CSV_HEADER}").map_err(io)?;
    let mut records = Vec::new();
    for spec in &cfg.workloads {
        let values = workload_values(spec, cfg.mask32)?;
        for &algorithm in &cfg.algorithms {
            let record = bench_values(algorithm, &spec.to_string(), &values, cfg.runs)?;
            writeln!(out, "{}", record.csv_row()).map_err(io)?;
            out.flush().map_err(io)?;
            records.push(record);
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median_ns(&mut [5, 1, 3]), 3);
        assert_eq!(median_ns(&mut [4, 1, 3, 2]), 2);
        assert_eq!(median_ns(&mut [7]), 7);
    }

    #[test]
    fn two_algorithm_grid() {
        let cfg = BenchConfig {
            algorithms: vec![Algorithm::Assoc, Algorithm::Baseline(BaselineKind::RadixLsd)],
            workloads: vec!["uniform:100000:100000:1".parse().unwrap()],
            runs: 5,
            mask32: false,
        };
        let mut out = Vec::new();
        let records = cmd_bench(&cfg, &mut out).unwrap();
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.verified && r.median_ns > 0 && r.runs == 5));
        assert_eq!(records[0].k_passes, 1);
        assert_eq!(records[1].k_passes, 0);
        let csv = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = csv.split('\n').collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("assoc,uniform:100000:100000:1,100000,"));
        assert!(lines[1].ends_with(",1,true"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn empty_workload_rejected_before_timing() {
        let cfg = BenchConfig {
            algorithms: vec![Algorithm::Assoc],
            workloads: vec![WorkloadSpec::new(WorkloadKind::Uniform, 0, 10, 0)],
            runs: 1,
            mask32: false,
        };
        let mut out = Vec::new();
        assert!(matches!(cmd_bench(&cfg, &mut out), Err(CliError::Usage(_))));
        assert!(out.is_empty());
    }

    #[test]
    fn grid_parsing() {
        let grid = parse_grid("paper", 4).unwrap();
        assert_eq!(grid.len(), 4);
        assert_eq!(grid.iter().map(|w| w.m).collect::<Vec<_>>(), vec![10_000, 100_000, 1_000_000, 10_000_000]);
        let custom = parse_grid("uniform:10:10:1, constant:5:3:0", 0).unwrap();
        assert_eq!(custom.len(), 2);
        assert!(parse_grid("uniform:10", 0).is_err());
        assert!("quick".parse::<Algorithm>().is_err());
        assert_eq!("radix_lsd".parse::<Algorithm>().unwrap(), Algorithm::Baseline(BaselineKind::RadixLsd));
    }
}
