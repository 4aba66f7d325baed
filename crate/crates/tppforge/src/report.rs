//! Report emission (JSON and CSV), the triple file format, and batch runs
//! over a catalog.
//!
//! Wire schemas are stable:
//!
//! - search report JSON: `{group, order, mode, capacity, ratio: {num, den},
//!   ratio_decimal, witnesses: [{s, t, u, type, size}], neumann_bound,
//!   theorem_bound, nodes_explored, elapsed_ms, exhausted}`;
//! - search summary CSV columns: `group, order, mode, capacity, ratio_num,
//!   ratio_den, exhausted, nodes, millis`;
//! - scan CSV columns: `group, order, h_order, p, bound_num, bound_den,
//!   beta0, beta, rho0_num, rho0_den, rho_num, rho_den, holds, equality,
//!   conjecture_status` (absent values empty);
//! - triple file JSON: `{"group": spec, "S": [...], "T": [...], "U": [...]}`.

use std::path::Path;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::search::{self, SearchConfig, SearchMode, SearchReport};
use crate::specs::parse_group_spec;
use crate::structure::{
    conjecture_record, verify_corollary, verify_theorem, ConjectureRecord, ConjectureStatus,
    CorollaryReport, TheoremReport,
};
use crate::subgroups::enumerate_subgroups;
use crate::tpp::TppTriple;

// ---------------------------------------------------------------------------
// JSON wire forms
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct RatioFile {
    pub num: i64,
    pub den: i64,
}

impl From<Ratio<i64>> for RatioFile {
    fn from(r: Ratio<i64>) -> Self {
        RatioFile {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct WitnessFile {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub u: Vec<usize>,
    #[serde(rename = "type")]
    pub params: [usize; 3],
    pub size: u64,
}

#[derive(Serialize, Deserialize)]
pub struct SearchReportFile {
    pub group: String,
    pub order: usize,
    pub mode: String,
    pub capacity: u64,
    pub ratio: RatioFile,
    /// Decimal rendering of the exact ratio, for human readers only.
    pub ratio_decimal: f64,
    pub witnesses: Vec<WitnessFile>,
    pub neumann_bound: u64,
    pub theorem_bound: Option<RatioFile>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub exhausted: bool,
}

impl SearchReportFile {
    pub fn from_report(rep: &SearchReport) -> Self {
        SearchReportFile {
            group: rep.group.clone(),
            order: rep.order,
            mode: rep.mode.to_string(),
            capacity: rep.capacity,
            ratio: rep.ratio.into(),
            ratio_decimal: rep.ratio_f64(),
            witnesses: rep
                .witnesses
                .iter()
                .map(|w| WitnessFile {
                    s: w.s.to_vec(),
                    t: w.t.to_vec(),
                    u: w.u.to_vec(),
                    params: w.params(),
                    size: w.size(),
                })
                .collect(),
            neumann_bound: rep.neumann_bound,
            theorem_bound: rep.theorem_bound.map(Into::into),
            nodes_explored: rep.nodes_explored,
            elapsed_ms: rep.elapsed.as_millis() as u64,
            exhausted: rep.exhausted,
        }
    }
}

pub fn report_to_json(rep: &SearchReport) -> serde_json::Value {
    serde_json::to_value(SearchReportFile::from_report(rep)).expect("report serializes")
}

/// Triple file: `{"group": "<spec>", "S": [...], "T": [...], "U": [...]}`.
#[derive(Serialize, Deserialize)]
pub struct TripleFile {
    pub group: String,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    #[serde(rename = "U")]
    pub u: Vec<usize>,
}

impl TripleFile {
    pub fn from_triple(group: &str, tr: &TppTriple) -> Self {
        TripleFile {
            group: group.to_string(),
            s: tr.s.to_vec(),
            t: tr.t.to_vec(),
            u: tr.u.to_vec(),
        }
    }
}

/// Loads a triple file, builds its group, and validates all indices.
pub fn load_triple_file(path: &Path) -> Result<(GroupTable, TppTriple)> {
    let text = std::fs::read_to_string(path)?;
    let file: TripleFile = serde_json::from_str(&text)?;
    let spec = parse_group_spec(&file.group)?;
    let table = GroupTable::build(&spec)?;
    let triple = TppTriple::from_indices(&table, &file.s, &file.t, &file.u)?;
    Ok((table, triple))
}

// ---------------------------------------------------------------------------
// CSV schemas
// ---------------------------------------------------------------------------

const SUMMARY_HEADER: [&str; 9] = [
    "group",
    "order",
    "mode",
    "capacity",
    "ratio_num",
    "ratio_den",
    "exhausted",
    "nodes",
    "millis",
];

/// The one-line-per-search summary CSV.
pub fn summary_csv(reports: &[SearchReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER).map_err(csv_err)?;
    for rep in reports {
        w.write_record([
            rep.group.clone(),
            rep.order.to_string(),
            rep.mode.to_string(),
            rep.capacity.to_string(),
            rep.ratio.numer().to_string(),
            rep.ratio.denom().to_string(),
            rep.exhausted.to_string(),
            rep.nodes_explored.to_string(),
            rep.elapsed.as_millis().to_string(),
        ])
        .map_err(csv_err)?;
    }
    finish_csv(w)
}

/// One row of the theorem/corollary/conjecture scan CSV.
#[derive(Clone, Debug, Default)]
pub struct ScanRow {
    pub group: String,
    pub order: usize,
    pub h_order: Option<usize>,
    pub p: Option<usize>,
    pub bound: Option<Ratio<i64>>,
    pub beta0: Option<u64>,
    pub beta: Option<u64>,
    pub rho0: Option<Ratio<i64>>,
    pub rho: Option<Ratio<i64>>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    pub conjecture_status: Option<ConjectureStatus>,
}

impl From<&TheoremReport> for ScanRow {
    fn from(r: &TheoremReport) -> Self {
        ScanRow {
            group: r.group.clone(),
            order: r.order,
            h_order: Some(r.h_order),
            p: Some(r.p),
            bound: Some(r.bound),
            beta0: Some(r.beta0),
            rho0: Some(r.rho0),
            holds: Some(r.holds),
            equality: Some(r.equality),
            ..ScanRow::default()
        }
    }
}

impl From<&ConjectureRecord> for ScanRow {
    fn from(r: &ConjectureRecord) -> Self {
        ScanRow {
            group: r.group.clone(),
            order: r.order,
            h_order: Some(r.h_order),
            p: Some(r.p),
            bound: Some(r.bound),
            beta: r.rho.map(|rho| {
                debug_assert_eq!(
                    (rho * Ratio::from_integer(r.order as i64)).denom(),
                    &1i64
                );
                (rho * Ratio::from_integer(r.order as i64)).to_integer() as u64
            }),
            rho: r.rho,
            conjecture_status: Some(r.status),
            ..ScanRow::default()
        }
    }
}

const SCAN_HEADER: [&str; 15] = [
    "group",
    "order",
    "h_order",
    "p",
    "bound_num",
    "bound_den",
    "beta0",
    "beta",
    "rho0_num",
    "rho0_den",
    "rho_num",
    "rho_den",
    "holds",
    "equality",
    "conjecture_status",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn opt_ratio_num(v: Option<Ratio<i64>>) -> String {
    opt(v.map(|r| *r.numer()))
}

fn opt_ratio_den(v: Option<Ratio<i64>>) -> String {
    opt(v.map(|r| *r.denom()))
}

/// The scan CSV (theorem, corollary and conjecture outcomes).
pub fn scan_csv(rows: &[ScanRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SCAN_HEADER).map_err(csv_err)?;
    for row in rows {
        w.write_record([
            row.group.clone(),
            row.order.to_string(),
            opt(row.h_order),
            opt(row.p),
            opt_ratio_num(row.bound),
            opt_ratio_den(row.bound),
            opt(row.beta0),
            opt(row.beta),
            opt_ratio_num(row.rho0),
            opt_ratio_den(row.rho0),
            opt_ratio_num(row.rho),
            opt_ratio_den(row.rho),
            opt(row.holds),
            opt(row.equality),
            opt(row.conjecture_status),
        ])
        .map_err(csv_err)?;
    }
    finish_csv(w)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e)))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(std::io::Error::other(e)))
}

// ---------------------------------------------------------------------------
// Batch runs
// ---------------------------------------------------------------------------

/// Everything a batch run produced; the caller decides the exit code.
#[derive(Default)]
pub struct BatchOutcome {
    pub reports: Vec<SearchReport>,
    /// `(group name, error message)` per failed entry; the batch continues.
    pub failures: Vec<(String, String)>,
    pub theorem_reports: Vec<TheoremReport>,
    pub corollary_reports: Vec<CorollaryReport>,
    pub conjecture_records: Vec<ConjectureRecord>,
    pub scan_rows: Vec<ScanRow>,
    /// True when any proven bound came back violated; callers must abort
    /// loudly (exit code 2) on this.
    pub any_theorem_violation: bool,
    pub any_truncated: bool,
}

/// Runs one search mode over a catalog. In subgroup-capacity mode, the
/// prime-index bound and its corollary are verified for every qualifying
/// group; in full-capacity mode, conjecture records are collected for
/// groups with cyclic normal subgroups of prime index.
///
/// With `out_dir` set, writes per-group report JSON plus `summary.csv`, and
/// `scan.csv` when any scan rows were produced.
pub fn run_batch(
    entries: &[CatalogEntry],
    mode: SearchMode,
    cfg: &SearchConfig,
    out_dir: Option<&Path>,
) -> Result<BatchOutcome> {
    let mut out = BatchOutcome::default();
    for entry in entries {
        let table = match entry.table() {
            Ok(t) => t,
            Err(e) => {
                out.failures.push((entry.name.clone(), e.to_string()));
                continue;
            }
        };
        let report = match mode {
            SearchMode::SubgroupCapacity => search::subgroup_capacity(&table),
            SearchMode::FullCapacity => search::capacity(&table, cfg),
            SearchMode::FixedType(a, b, c) => search::find_triple_of_type(&table, (a, b, c), cfg),
        };
        let report = match report {
            Ok(r) => r,
            Err(e) => {
                out.failures.push((entry.name.clone(), e.to_string()));
                continue;
            }
        };
        out.any_truncated |= !report.exhausted;

        match mode {
            SearchMode::SubgroupCapacity => {
                let subs = enumerate_subgroups(&table)?;
                let theorems = verify_theorem(&table, &subs, &report)?;
                for t in &theorems {
                    out.any_theorem_violation |= !t.holds;
                    out.scan_rows.push(ScanRow::from(t));
                }
                let corollary = verify_corollary(&table, &subs, &report)?;
                out.any_theorem_violation |= !corollary.all_hold;
                out.theorem_reports.extend(theorems);
                out.corollary_reports.push(corollary);
            }
            SearchMode::FullCapacity => {
                let subs = enumerate_subgroups(&table)?;
                if let Some(rec) = conjecture_record(&table, &subs, Some(&report)) {
                    out.scan_rows.push(ScanRow::from(&rec));
                    out.conjecture_records.push(rec);
                }
            }
            SearchMode::FixedType(..) => {}
        }
        out.reports.push(report);
    }

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        for (i, rep) in out.reports.iter().enumerate() {
            let name = format!("{i:03}_{}.json", sanitize_name(&rep.group));
            let json = serde_json::to_string_pretty(&SearchReportFile::from_report(rep))?;
            std::fs::write(dir.join(name), json)?;
        }
        std::fs::write(dir.join("summary.csv"), summary_csv(&out.reports)?)?;
        if !out.scan_rows.is_empty() {
            std::fs::write(dir.join("scan.csv"), scan_csv(&out.scan_rows)?)?;
        }
    }
    Ok(out)
}

/// Runs the exhaustive full-capacity search over every catalog entry whose
/// hypothesis holds (a cyclic normal subgroup of prime index) up to
/// `max_order`, and records the conjecture status of each. Groups whose
/// searches cannot run or do not exhaust are skipped with a notice in the
/// outcome's failure list, or recorded as inconclusive.
pub fn conjecture_scan(
    entries: &[CatalogEntry],
    max_order: usize,
    cfg: &SearchConfig,
    out_dir: Option<&Path>,
) -> Result<BatchOutcome> {
    let filtered: Vec<CatalogEntry> = entries
        .iter()
        .filter(|e| e.order <= max_order && !e.tags.cyclic_normal_prime_index.is_empty())
        .cloned()
        .collect();
    run_batch(&filtered, SearchMode::FullCapacity, cfg, out_dir)
}

/// Filesystem-safe version of a group name.
pub fn sanitize_name(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry_from_spec_text;
    use crate::group::GroupSpec;

    #[test]
    fn summary_csv_schema() {
        let g = GroupTable::build(&GroupSpec::Dihedral(3)).unwrap();
        let rep = search::subgroup_capacity(&g).unwrap();
        let csv = summary_csv(&[rep]).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "group,order,mode,capacity,ratio_num,ratio_den,exhausted,nodes,millis"
        );
        let row = lines.next().unwrap();
        // Spec strings contain commas, so the group field is quoted.
        assert!(row.starts_with("\"dihedral:3\"") || row.starts_with("dihedral:3"));
        assert!(row.contains(",6,beta0,8,4,3,true,"));
    }

    #[test]
    fn empty_batch_yields_header_only() {
        let csv = summary_csv(&[]).unwrap();
        assert_eq!(csv.lines().count(), 1);
    }

    #[test]
    fn report_json_round_trip() {
        let g = GroupTable::build(&GroupSpec::Semidirect { n: 7, m: 3, k: 2 }).unwrap();
        let rep = search::subgroup_capacity(&g).unwrap();
        let json = report_to_json(&rep);
        let back: SearchReportFile = serde_json::from_value(json).unwrap();
        assert_eq!(back.capacity, 27);
        assert_eq!(back.ratio.num, 9);
        assert_eq!(back.ratio.den, 7);
        assert_eq!(back.mode, "beta0");
        assert!(back.exhausted);
        assert_eq!(back.witnesses[0].params, [3, 3, 3]);
        // The theorem bound for p = 3 is (9/5) * 21 = 189/5.
        let bound = back.theorem_bound.unwrap();
        assert_eq!((bound.num, bound.den), (189, 5));
    }

    #[test]
    fn dihedral_beta0_batch_stays_under_four_thirds() {
        let entries: Vec<CatalogEntry> = (1..=8)
            .map(|n| entry_from_spec_text(&format!("dihedral:{n}")).unwrap())
            .collect();
        let out = run_batch(
            &entries,
            SearchMode::SubgroupCapacity,
            &SearchConfig::default(),
            None,
        )
        .unwrap();
        assert_eq!(out.reports.len(), 8);
        assert!(out.failures.is_empty());
        assert!(!out.any_theorem_violation);
        for rep in &out.reports {
            assert!(rep.ratio <= Ratio::new(4, 3), "{}: {}", rep.group, rep.ratio);
        }
        // Every dihedral group has an abelian normal subgroup of index 2.
        assert!(out.theorem_reports.iter().all(|t| t.holds));
        assert!(!out.scan_rows.is_empty());
        let csv = scan_csv(&out.scan_rows).unwrap();
        assert!(csv.starts_with("group,order,h_order,p,bound_num,bound_den,beta0,beta,"));
    }

    #[test]
    fn batch_continues_past_bad_entries() {
        let (entries, failures) = crate::catalog::catalog_from_lines("cyclic:6\nbad:1\n");
        assert_eq!(failures.len(), 1);
        let out = run_batch(
            &entries,
            SearchMode::SubgroupCapacity,
            &SearchConfig::default(),
            None,
        )
        .unwrap();
        assert_eq!(out.reports.len(), 1);
    }

    #[test]
    fn triple_file_round_trip() {
        let g = GroupTable::build(&GroupSpec::Dihedral(3)).unwrap();
        let tr = TppTriple::from_indices(&g, &[0, 3], &[0, 4], &[0, 5]).unwrap();
        let file = TripleFile::from_triple("dihedral:3", &tr);
        let json = serde_json::to_string(&file).unwrap();
        assert!(json.contains("\"S\":[0,3]"));
        let dir = std::env::temp_dir().join("tppforge-test-triple");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("triple.json");
        std::fs::write(&path, &json).unwrap();
        let (g2, tr2) = load_triple_file(&path).unwrap();
        assert_eq!(g2.order(), 6);
        assert_eq!(tr2.s.to_vec(), vec![0, 3]);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn conjecture_scan_over_catalog_subset() {
        let cat = crate::catalog::standard_catalog();
        let out = conjecture_scan(&cat, 12, &SearchConfig::default(), None).unwrap();
        assert!(out.failures.is_empty());
        assert!(!out.conjecture_records.is_empty());
        // Everything scanned at this size holds; dihedral:6 sits exactly on
        // the bound.
        assert!(out
            .conjecture_records
            .iter()
            .all(|r| r.status == crate::structure::ConjectureStatus::Holds));
        let d6 = out
            .conjecture_records
            .iter()
            .find(|r| r.group == "dihedral:6")
            .unwrap();
        assert_eq!(d6.rho, Some(Ratio::new(4, 3)));
    }

    #[test]
    fn sanitize_names() {
        assert_eq!(sanitize_name("sd:7,3,2"), "sd_7_3_2");
        assert_eq!(sanitize_name("[32,11]"), "_32_11_");
        assert_eq!(sanitize_name("prod:cyclic:4*cyclic:4"), "prod_cyclic_4_cyclic_4");
    }
}
