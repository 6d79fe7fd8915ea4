//! Seeded workload generators.
//!
//! A workload is described by a [`WorkloadSpec`] and has a compact token
//! form `kind:n:m:seed`, with an optional fifth `rate` field for
//! geometric workloads. All randomness comes from [`SplitMix64`] seeded
//! with `seed`, so a token always produces the same list.
//!
//! | kind         | values                                                        |
//! |--------------|---------------------------------------------------------------|
//! | `uniform`    | i.i.d. in `[0, m)`                                            |
//! | `geometric`  | `floor(Exp(rate))`, rate defaults to `1/m`, capped at `2^63-1`|
//! | `worst_case` | chain `a_1 = 0`, `a_{j+1} = a_j + (n - j + 1)`, shuffled      |
//! | `best_case`  | i.i.d. in `[0, n)` (m ignored)                                |
//! | `constant`   | `m - 1` repeated                                              |
//! | `sorted`     | uniform in `[0, m)`, ascending                                |
//! | `reversed`   | uniform in `[0, m)`, descending                               |
//!
//! The geometric default puts about 63% of the mass below `m`. The
//! worst-case chain places exactly one value in each pass's practiced
//! interval; it is cut short if it would exceed the payload bound.

use std::fmt;
use std::str::FromStr;

use crate::error::WorkloadError;
use crate::rng::SplitMix64;
use crate::word::{MAX_LEN, MAX_PAYLOAD};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WorkloadKind {
    Uniform,
    Geometric,
    WorstCase,
    BestCase,
    Constant,
    Sorted,
    Reversed,
}

impl WorkloadKind {
    pub const ALL: [WorkloadKind; 7] = [
        WorkloadKind::Uniform,
        WorkloadKind::Geometric,
        WorkloadKind::WorstCase,
        WorkloadKind::BestCase,
        WorkloadKind::Constant,
        WorkloadKind::Sorted,
        WorkloadKind::Reversed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WorkloadKind::Uniform => "uniform",
            WorkloadKind::Geometric => "geometric",
            WorkloadKind::WorstCase => "worst_case",
            WorkloadKind::BestCase => "best_case",
            WorkloadKind::Constant => "constant",
            WorkloadKind::Sorted => "sorted",
            WorkloadKind::Reversed => "reversed",
        }
    }

    fn uses_range(self) -> bool {
        !matches!(self, WorkloadKind::WorstCase | WorkloadKind::BestCase)
    }
}

impl fmt::Display for WorkloadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WorkloadKind {
    type Err = WorkloadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WorkloadKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| WorkloadError::UnknownKind(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkloadSpec {
    pub kind: WorkloadKind,
    pub n: usize,
    pub m: u64,
    pub seed: u64,
    /// Geometric rate; `None` means `1/m`.
    pub rate: Option<f64>,
}

impl WorkloadSpec {
    pub fn new(kind: WorkloadKind, n: usize, m: u64, seed: u64) -> Self {
        WorkloadSpec { kind, n, m, seed, rate: None }
    }

    pub fn validate(&self) -> Result<(), WorkloadError> {
        if self.n as u64 > MAX_LEN {
            return Err(WorkloadError::TooLong(self.n));
        }
        if self.kind.uses_range() {
            if self.m == 0 {
                return Err(WorkloadError::ZeroRange(self.kind.name()));
            }
            if self.m > MAX_PAYLOAD + 1 {
                return Err(WorkloadError::RangeTooWide { m: self.m });
            }
        }
        if let Some(rate) = self.rate {
            if !(rate.is_finite() && rate > 0.0) {
                return Err(WorkloadError::InvalidRate(rate));
            }
        }
        Ok(())
    }
}

impl fmt::Display for WorkloadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}", self.kind, self.n, self.m, self.seed)?;
        if let Some(rate) = self.rate {
            write!(f, ":{rate}")?;
        }
        Ok(())
    }
}

impl FromStr for WorkloadSpec {
    type Err = WorkloadError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let malformed = || WorkloadError::MalformedToken(token.to_owned());
        let fields: Vec<&str> = token.split(':').collect();
        if !(4..=5).contains(&fields.len()) {
            return Err(malformed());
        }
        let kind = fields[0].parse()?;
        let n = fields[1].parse().map_err(|_| malformed())?;
        let m = fields[2].parse().map_err(|_| malformed())?;
        let seed = fields[3].parse().map_err(|_| malformed())?;
        let rate = match fields.get(4) {
            Some(r) => Some(r.parse().map_err(|_| malformed())?),
            None => None,
        };
        let spec = WorkloadSpec { kind, n, m, seed, rate };
        spec.validate()?;
        Ok(spec)
    }
}

/// Generates the list described by `spec`.
pub fn generate(spec: &WorkloadSpec) -> Result<Vec<u64>, WorkloadError> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    let n = spec.n;
    let values = match spec.kind {
        WorkloadKind::Uniform => uniform(&mut rng, n, spec.m),
        WorkloadKind::BestCase => uniform(&mut rng, n, n.max(1) as u64),
        WorkloadKind::Geometric => {
            let rate = spec.rate.unwrap_or(1.0 / spec.m as f64);
            (0..n)
                .map(|_| {
                    let x = -(1.0 - rng.unit_f64()).ln() / rate;
                    // float-to-int casts saturate
                    (x.floor() as u64).min(MAX_PAYLOAD)
                })
                .collect()
        }
        WorkloadKind::WorstCase => {
            let mut chain = worst_case_chain(n);
            rng.shuffle(&mut chain);
            chain
        }
        WorkloadKind::Constant => vec![spec.m - 1; n],
        WorkloadKind::Sorted => {
            let mut v = uniform(&mut rng, n, spec.m);
            v.sort_unstable();
            v
        }
        WorkloadKind::Reversed => {
            let mut v = uniform(&mut rng, n, spec.m);
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        }
    };
    Ok(values)
}

fn uniform(rng: &mut SplitMix64, n: usize, m: u64) -> Vec<u64> {
    (0..n).map(|_| rng.below(m)).collect()
}

/// The unshuffled adversarial chain, truncated at the payload bound.
pub fn worst_case_chain(n: usize) -> Vec<u64> {
    let mut chain = Vec::with_capacity(n);
    if n == 0 {
        return chain;
    }
    let mut value = 0u64;
    chain.push(value);
    for j in 1..n {
        let gap = (n - j + 1) as u64;
        match value.checked_add(gap) {
            Some(next) if next <= MAX_PAYLOAD => value = next,
            _ => break,
        }
        chain.push(value);
    }
    chain
}
