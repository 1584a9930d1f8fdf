//! Alt-Tamari posets on Dyck paths: construction, linear-interval census,
//! the bijections behind it, and exact series oracles.
//!
//! ```
//! use alt_tamari::{census, IncrementFunction};
//!
//! let table = census(&IncrementFunction::parse("0110").unwrap()).unwrap();
//! assert_eq!(table.total(), 49u32.into());
//! assert!(table.matches_closed_form());
//! ```

pub mod alt_tamari;
pub mod bijection;
pub mod census;
pub mod cli;
pub mod dyck;
pub mod error;
pub mod poset;
pub mod series;
pub mod tree;
pub mod verify;

pub use alt_tamari::{
    build_alt_tamari, delta_excursion, delta_rotation, refines, step_stats, test_deltas, DeltaSpec,
    IncrementFunction, StepStats, DEFAULT_SEED,
};
pub use bijection::{compose, decompose, transport, Decomposition, MarkedPath};
pub use census::{census, classify, closed_form, total_closed_form, CountsTable, IntervalKind};
pub use dyck::{enumerate_paths, DyckPath, Span, Step};
pub use error::{Error, Result};
pub use poset::{LinearPolynomial, Poset};
pub use series::{SeriesOracle, TruncatedSeries};
pub use tree::{tree_to_path, BinaryTree, TreeInterval};

/// Environment variable that raises the size caps below.
pub const MAX_N_ENV: &str = "ALT_TAMARI_MAX_N";

pub const DEFAULT_ENUMERATION_CAP: usize = 14;
pub const DEFAULT_POSET_CAP: usize = 9;

pub(crate) fn env_cap() -> Option<usize> {
    std::env::var(MAX_N_ENV).ok()?.trim().parse().ok()
}

/// Largest `n` for which paths are enumerated.
pub fn enumeration_cap() -> usize {
    env_cap().map_or(DEFAULT_ENUMERATION_CAP, |c| c.min(dyck::MAX_PATH_SIZE))
}

/// Largest `n` for which a full poset is built.
pub fn poset_cap() -> usize {
    env_cap().map_or(DEFAULT_POSET_CAP, |c| c.min(dyck::MAX_PATH_SIZE))
}
