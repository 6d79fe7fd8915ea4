//! # assoc-sort
//!
//! In-place associative integer sorting.
//!
//! Each pass takes the minimum `delta` of the unsorted suffix and treats the
//! suffix's own `n` positions as a table indexed by `value - delta`. Values
//! that land inside `[delta, delta + n)` are *practiced* into tagged nodes
//! that count their occurrences, the node records are *stored* at the front
//! of the suffix, and the sorted run is *retrieved* by walking the nodes
//! right to left. Values outside the interval are pushed behind the sorted
//! run and handled by the next pass. Only a fixed number of counters and
//! indices are used beside the list itself.
//!
//! ```
//! let mut values = vec![5, 9, 5, 5, 0, 7];
//! let report = assoc_sort::assoc_sort(&mut values).unwrap();
//! assert_eq!(values, [0, 5, 5, 5, 7, 9]);
//! // 9 and 7 fall outside [0, 6) and take a second pass
//! assert_eq!(report.k(), 2);
//! ```

pub mod assoc;
pub mod baselines;
pub mod datagen;
mod error;
pub mod rng;
pub mod word;

pub use assoc::{
    assoc_sort, assoc_sort_with, find_min, hash_index, inverse_hash, partition_idle, practice, retrieve,
    sort_full_universe, sort_pass, store_records, NoProbe, PassStats, Probe, SortReport, UniverseReport,
};
pub use baselines::BaselineKind;
pub use datagen::{generate, WorkloadKind, WorkloadSpec};
pub use error::{BaselineError, SortError, WorkloadError};
pub use word::TaggedWord;
