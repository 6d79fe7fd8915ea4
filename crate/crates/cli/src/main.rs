use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use assoc_sort_cli::bench::parse_grid;
use assoc_sort_cli::{
    cmd_bench, cmd_sort, cmd_trace, cmd_verify, Algorithm, BenchConfig, CliError, Format, SortOptions, VerifyConfig,
};
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "assoc-sort", version, about = "In-place associative integer sorting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sort an integer file
    Sort {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Bytes per word in binary files
        #[arg(long, default_value_t = 8)]
        word_bytes: usize,
        /// Accept values of 2^63 and above
        #[arg(long)]
        full_universe: bool,
        /// Read and write two's complement values
        #[arg(long)]
        signed: bool,
    },
    /// Differential fuzzing against the oracle sort
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 100_000)]
        max_n: usize,
        #[arg(long, env = "ASSOC_SORT_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Time algorithms over a workload grid and write CSV
    Bench {
        /// `paper`, or comma-separated workload tokens kind:n:m:seed[:rate]
        #[arg(long, default_value = "paper")]
        grid: String,
        /// Comma-separated: assoc, comparison, radix_lsd, bucket, counting
        #[arg(long, value_delimiter = ',')]
        algorithms: Vec<String>,
        #[arg(long, default_value_t = 9)]
        runs: usize,
        /// CSV destination, stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "ASSOC_SORT_SEED", default_value_t = 0)]
        seed: u64,
        /// Keep only the low 32 bits of generated values (implied by `--grid paper`)
        #[arg(long)]
        mask32: bool,
    },
    /// Print the per-pass table for one workload token
    Trace { token: String },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    match cli.command {
        Command::Sort { input, output, format, word_bytes, full_universe, signed } => {
            cmd_sort(&input, &output, &SortOptions { format, word_bytes, full_universe, signed })
        }
        Command::Verify { trials, max_n, seed } => {
            cmd_verify(&VerifyConfig { trials, max_n, seed, inject_fault: false }, &mut stdout.lock()).map(|_| ())
        }
        Command::Bench { grid, algorithms, runs, out, seed, mask32 } => {
            let algorithms = if algorithms.is_empty() {
                Algorithm::ALL.to_vec()
            } else {
                algorithms.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
            };
            let cfg = BenchConfig { algorithms, workloads: parse_grid(&grid, seed)?, runs, mask32: mask32 || grid == "paper" };
            let mut sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| CliError::Io { path: path.clone(), source: e })?)),
                None => Box::new(stdout.lock()),
            };
            cmd_bench(&cfg, &mut sink)?;
            sink.flush().map_err(|e| CliError::Io { path: out.unwrap_or_default(), source: e })
        }
        Command::Trace { token } => cmd_trace(&token, &mut stdout.lock()).map(|_| ()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("assoc-sort: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
