//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building groups, checking triples, or
/// running searches.
#[derive(Debug, Error)]
pub enum Error {
    /// A group recipe has inconsistent parameters (e.g. a semidirect product
    /// whose twist is not an automorphism of the right order).
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    /// An ingested multiplication table violates a group axiom.
    #[error("table is not a group: {0}")]
    TableInvalid(String),

    /// A group or search exceeds the configured order cap.
    #[error("order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },

    /// An operation that requires non-empty sets was handed an empty one.
    #[error("set '{0}' is empty")]
    EmptySet(&'static str),

    /// A set that must be a subgroup is not closed.
    #[error("set is not a subgroup: {0}")]
    NotASubgroup(String),

    /// A subgroup that must be normal is not.
    #[error("subgroup is not normal in the group")]
    NotNormal,

    /// A subgroup that must be abelian is not.
    #[error("subgroup is not abelian")]
    NotAbelian,

    /// A triple that must satisfy the triple product property does not.
    #[error("triple does not satisfy the triple product property")]
    NotATppTriple,

    /// A derived quantity was requested from a truncated search.
    #[error("search did not exhaust the space; rerun without budgets")]
    SearchNotExhausted,

    /// A group spec string failed to parse.
    #[error("parse error at byte {pos}: expected {expected}, found {found:?}")]
    Parse {
        pos: usize,
        expected: String,
        found: String,
    },

    /// Triple data is inconsistent with its group (bad index, wrong capacity).
    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    /// Matrix data is inconsistent with the triple indexing it.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
