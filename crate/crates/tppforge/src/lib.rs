//! tppforge: exact triple product property (TPP) search and verification in
//! small finite groups.
//!
//! The crate builds small finite groups as explicit multiplication tables,
//! decides the TPP for triples of subsets, computes exact TPP capacities
//! (over all subsets, and over subgroups only) by pruned exhaustive search,
//! checks the structural bounds that constrain those capacities, and
//! validates discovered triples operationally by running integer matrix
//! multiplication through the group algebra.
//!
//! Start with the runnable programs under `examples/`; each one walks
//! through a single capability end to end. The `tppforge` binary exposes the
//! same functionality as subcommands.

pub mod bits;
pub mod catalog;
pub mod error;
pub mod group;
pub mod matmul;
pub mod report;
pub mod search;
pub mod specs;
pub mod structure;
pub mod subgroups;
pub mod tables;
pub mod tpp;
pub mod util;

pub use bits::ElementSet;
pub use error::{Error, Result};
pub use group::{verify_group_axioms, GroupSpec, GroupTable};
pub use search::{SearchConfig, SearchMode, SearchReport};
pub use specs::parse_group_spec;
pub use subgroups::{enumerate_subgroups, SubgroupRecord};
pub use tpp::TppTriple;
