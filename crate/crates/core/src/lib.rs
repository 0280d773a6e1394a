//! Occurrence distributions of mesh patterns in permutations.
//!
//! Exact formulas for length-2 mesh patterns are checked against an
//! exhaustive oracle over `S_n`. Series arithmetic is exact and truncated.
//! The `bijection` module maps occurrences of Nr. 48 onto occurrences of Nr. 49.

pub mod bijection;
pub mod catalog;
pub mod equidist;
pub mod error;
pub mod formulas;
mod json;
pub mod oracle;
pub mod pattern;
pub mod perm;
pub mod series;
pub mod verify;

pub use catalog::{catalog, lookup, strong_fixed_point, CatalogEntry, Status};
pub use error::{Error, Result};
pub use formulas::TheoremId;
pub use oracle::{
    avoiders_lex, brute_distribution, brute_joint, DistributionTable, JointTable, OracleConfig,
};
pub use pattern::{MeshPattern, Symmetry};
pub use perm::{all_permutations, reduce, Permutation};
pub use series::{QPoly, TruncatedSeries};
