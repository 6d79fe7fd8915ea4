use std::fmt::Write as _;
use std::io::Write;

use assoc_sort::{assoc_sort, generate, SortReport, WorkloadSpec};

use crate::error::CliError;

pub fn render(report: &SortReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:>5} {:>10} {:>10} {:>20} {:>10} {:>10} {:>10} {:>20}", "pass", "start", "n", "delta", "n_d", "n_c", "n_d'", "delta'");
    for (t, p) in report.passes.iter().enumerate() {
        let next = p.delta_prime.map_or_else(|| "-".to_owned(), |d| d.to_string());
        let _ = writeln!(
            s,
            "{:>5} {:>10} {:>10} {:>20} {:>10} {:>10} {:>10} {:>20}",
            t + 1,
            p.start,
            p.n,
            p.delta,
            p.n_d,
            p.n_c,
            p.n_d_prime,
            next
        );
    }
    let _ = writeln!(
        s,
        "passes {} n {} work {} writes {} residual {} beta {:.4}",
        report.k(),
        report.n,
        report.work(),
        report.total_writes,
        report.residual,
        report.beta
    );
    s
}

/// The `trace` command: sorts the workload named by `token` and prints the
/// per-pass table.
pub fn cmd_trace(token: &str, out: &mut dyn Write) -> Result<SortReport, CliError> {
    let spec: WorkloadSpec =
        token.parse().map_err(|e| CliError::Usage(format!("invalid workload token `{token}`: {e}")))?;
    let mut values = generate(&spec)?;
    let report = assoc_sort(&mut values)?;
    out.write_all(render(&report).as_bytes()).map_err(|e| CliError::io("<stdout>", e))?;
    Ok(report)
}
