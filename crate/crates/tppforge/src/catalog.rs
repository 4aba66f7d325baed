//! The group catalog: a curated family of small groups used by batch runs,
//! scans, and the test suites.
//!
//! Tags are always recomputed from the constructed table, never trusted
//! from input files.

use crate::error::{Error, Result};
use crate::group::{GroupSpec, GroupTable};
use crate::specs::parse_group_spec;
use crate::subgroups::{
    enumerate_subgroups, find_abelian_normal_prime_index, find_cyclic_normal_prime_index,
};
use crate::tables;

/// Where a catalog entry's table comes from.
#[derive(Clone, Debug)]
pub enum GroupSource {
    Spec(GroupSpec),
    /// One of the built-in tables (see [`crate::tables`]).
    Builtin(&'static str),
}

/// Structural facts about a catalog group.
#[derive(Clone, Debug, Default)]
pub struct Tags {
    pub abelian: bool,
    /// `Some(p)` when the order is a positive power of the prime p.
    pub p_group: Option<usize>,
    /// Prime indices of cyclic normal subgroups, ascending.
    pub cyclic_normal_prime_index: Vec<usize>,
    /// Prime indices of abelian normal subgroups, ascending.
    pub abelian_normal_prime_index: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub source: GroupSource,
    pub order: usize,
    pub tags: Tags,
}

impl CatalogEntry {
    pub fn table(&self) -> Result<GroupTable> {
        match &self.source {
            GroupSource::Spec(spec) => GroupTable::build(spec),
            GroupSource::Builtin(name) => tables::builtin(name)
                .ok_or_else(|| Error::InvalidSpec(format!("unknown built-in table {name}"))),
        }
    }
}

fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Computes the tags for a constructed table.
pub fn tags_for(g: &GroupTable) -> Result<Tags> {
    let subs = enumerate_subgroups(g)?;
    let mut cyclic: Vec<usize> = find_cyclic_normal_prime_index(g, &subs)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    cyclic.sort_unstable();
    cyclic.dedup();
    let mut abelian: Vec<usize> = find_abelian_normal_prime_index(g, &subs)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    abelian.sort_unstable();
    abelian.dedup();
    Ok(Tags {
        abelian: g.is_abelian(),
        p_group: prime_power_base(g.order()),
        cyclic_normal_prime_index: cyclic,
        abelian_normal_prime_index: abelian,
    })
}

fn entry_from_source(name: String, source: GroupSource) -> Result<CatalogEntry> {
    let table = match &source {
        GroupSource::Spec(spec) => GroupTable::build(spec)?,
        GroupSource::Builtin(n) => tables::builtin(n)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown built-in table {n}")))?,
    };
    Ok(CatalogEntry {
        name,
        order: table.order(),
        tags: tags_for(&table)?,
        source,
    })
}

/// Builds one entry from a spec string.
pub fn entry_from_spec_text(text: &str) -> Result<CatalogEntry> {
    let spec = parse_group_spec(text)?;
    entry_from_source(spec.to_string(), GroupSource::Spec(spec))
}

/// Parses a catalog file: one spec per line, `#` comments and blank lines
/// ignored. Unparsable or unbuildable lines are collected, not fatal.
pub fn catalog_from_lines(lines: &str) -> (Vec<CatalogEntry>, Vec<(String, Error)>) {
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for line in lines.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match entry_from_spec_text(line) {
            Ok(e) => entries.push(e),
            Err(err) => failures.push((line.to_string(), err)),
        }
    }
    (entries, failures)
}

/// The standard catalog: every group of order at most 10, abelian groups
/// through order 24, the dihedral family through order 32, a family of
/// split metacyclic extensions, and the built-in tables (the quaternion
/// groups and the two order-32 wreath-type groups).
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=24 {
        specs.push(format!("cyclic:{n}"));
    }
    for text in [
        "prod:cyclic:2*cyclic:2",
        "prod:cyclic:4*cyclic:2",
        "prod:prod:cyclic:2*cyclic:2*cyclic:2",
        "prod:cyclic:3*cyclic:3",
        "prod:cyclic:6*cyclic:2",
        "prod:cyclic:8*cyclic:2",
        "prod:cyclic:4*cyclic:4",
        "prod:prod:cyclic:4*cyclic:2*cyclic:2",
        "prod:prod:prod:cyclic:2*cyclic:2*cyclic:2*cyclic:2",
        "prod:cyclic:12*cyclic:2",
        "prod:prod:cyclic:6*cyclic:2*cyclic:2",
    ] {
        specs.push(text.to_string());
    }
    for n in 1..=16 {
        specs.push(format!("dihedral:{n}"));
    }
    for text in [
        "sd:3,4,2",  // dicyclic of order 12
        "sd:4,4,3",  // order 16
        "sd:5,4,2",  // order 20
        "sd:7,3,2",  // the order-21 group with cyclic normal C7 of index 3
        "sd:8,2,3",  // semidihedral of order 16
        "sd:8,2,5",  // modular group of order 16
        "sd:9,3,4",  // order-27 extraspecial-exponent-9 type
        "sd:8,4,3",  // order 32
        "sd:16,2,7", // semidihedral of order 32
        "sd:16,2,9", // modular group of order 32
    ] {
        specs.push(text.to_string());
    }

    let mut entries: Vec<CatalogEntry> = specs
        .iter()
        .map(|text| entry_from_spec_text(text).expect("standard catalog entries build"))
        .collect();
    for (name, _) in tables::builtin_tables() {
        entries.push(
            entry_from_source(name.to_string(), GroupSource::Builtin(name))
                .expect("built-in tables build"),
        );
    }
    entries
}
