//! Command-line front end for `assoc-sort`: file sorting, differential
//! verification, pass tracing and timing benchmarks.

pub mod bench;
mod error;
pub mod format;
pub mod trace;
pub mod verify;

pub use bench::{cmd_bench, Algorithm, BenchConfig, BenchRecord};
pub use error::CliError;
pub use format::{cmd_sort, Format, SortOptions};
pub use trace::cmd_trace;
pub use verify::{cmd_verify, VerifyConfig, VerifyReport};
