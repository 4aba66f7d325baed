//! Scanning groups with cyclic normal subgroups of prime index.
//!
//! For each catalog group of order at most 21 whose hypothesis holds, runs
//! the exhaustive full-capacity search and records whether
//! `ratio <= p^2/(2p-1)` for the smallest qualifying prime p. A violation
//! would be a genuine finding and is printed prominently, never discarded.
//!
//! ```bash
//! cargo run --release --example conjecture_scan
//! ```

use tppforge::catalog::standard_catalog;
use tppforge::report::{scan_csv, ScanRow};
use tppforge::search::capacity;
use tppforge::structure::{conjecture_record, ConjectureStatus};
use tppforge::subgroups::enumerate_subgroups;
use tppforge::{Result, SearchConfig};

fn main() -> Result<()> {
    let cfg = SearchConfig::default();
    let mut rows = Vec::new();
    for entry in standard_catalog() {
        if entry.order > 21 || entry.tags.cyclic_normal_prime_index.is_empty() {
            continue;
        }
        let g = entry.table()?;
        let subs = enumerate_subgroups(&g)?;
        let report = capacity(&g, &cfg)?;
        let Some(rec) = conjecture_record(&g, &subs, Some(&report)) else {
            continue;
        };
        match rec.status {
            ConjectureStatus::Violated => println!(
                "COUNTEREXAMPLE: {} has ratio {} > {} (p = {})",
                rec.group,
                rec.rho.unwrap(),
                rec.bound,
                rec.p
            ),
            ConjectureStatus::Holds => println!(
                "{:<24} p={} ratio {:>5} <= {:<5} holds",
                rec.group,
                rec.p,
                rec.rho.unwrap().to_string(),
                rec.bound.to_string()
            ),
            ConjectureStatus::Inconclusive => {
                println!("{:<24} inconclusive (not exhausted)", rec.group)
            }
        }
        rows.push(ScanRow::from(&rec));
    }
    println!("\nscan CSV:\n{}", scan_csv(&rows)?);
    Ok(())
}
