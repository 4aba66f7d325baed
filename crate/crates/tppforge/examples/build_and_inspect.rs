//! Building groups and inspecting their structure.
//!
//! Shows the spec grammar, the axiom checker, subgroup enumeration with
//! normality/abelianness flags, cosets, and quotient groups.
//!
//! ```bash
//! cargo run --example build_and_inspect
//! ```

use tppforge::group::verify_group_axioms;
use tppforge::subgroups::{coset_table, enumerate_subgroups, quotient_table};
use tppforge::{parse_group_spec, GroupTable, Result};

fn main() -> Result<()> {
    for text in [
        "cyclic:6",
        "dihedral:6",
        "sd:7,3,2",
        "prod:cyclic:4*cyclic:4",
    ] {
        let spec = parse_group_spec(text)?;
        let g = GroupTable::build(&spec)?;
        println!(
            "{text}: order {}, abelian: {}, axioms hold: {}",
            g.order(),
            g.is_abelian(),
            verify_group_axioms(&g)
        );

        let subs = enumerate_subgroups(&g)?;
        println!("  {} subgroups:", subs.len());
        for s in &subs {
            println!(
                "    order {:>2} index {:>2} normal: {:<5} abelian: {:<5} {}",
                s.order,
                s.index,
                s.is_normal,
                s.is_abelian,
                s.elements
                    .iter()
                    .take(8)
                    .map(|e| g.label(e).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }

        // Decompose along the largest proper normal subgroup and build the
        // quotient group.
        if let Some(h) = subs
            .iter()
            .rev()
            .find(|s| s.is_normal && s.order < g.order() && s.order > 1)
        {
            let cosets = coset_table(&g, h)?;
            println!(
                "  G / (order-{} subgroup) has {} cosets of size {}",
                h.order,
                cosets.count(),
                h.order
            );
            let q = quotient_table(&g, h, &cosets)?;
            println!(
                "  quotient is a valid group of order {}: {}",
                q.order(),
                verify_group_axioms(&q)
            );
        }
        println!();
    }
    Ok(())
}
