//! The prime-index bound on subgroup capacity, verified computationally.
//!
//! For every group in the dihedral family (plus a few metacyclic
//! extensions), finds the abelian normal subgroups of prime index p,
//! computes the exact subgroup capacity, and checks
//! `rho0 <= p^2/(2p-1)` as exact rationals. Equality instances are real
//! and flagged as noteworthy.
//!
//! ```bash
//! cargo run --example theorem_bound
//! ```

use tppforge::search::subgroup_capacity;
use tppforge::structure::{verify_corollary, verify_theorem};
use tppforge::subgroups::enumerate_subgroups;
use tppforge::{parse_group_spec, GroupTable, Result};

fn main() -> Result<()> {
    let mut specs: Vec<String> = (2..=16).map(|n| format!("dihedral:{n}")).collect();
    specs.extend(["sd:7,3,2".to_string(), "sd:9,3,4".to_string()]);

    for text in &specs {
        let g = GroupTable::build(&parse_group_spec(text)?)?;
        let subs = enumerate_subgroups(&g)?;
        let rep = subgroup_capacity(&g)?;
        for t in verify_theorem(&g, &subs, &rep)? {
            assert!(t.holds, "a proven bound failed; investigate immediately");
            println!(
                "{:<14} |H|={:<3} p={} rho0 = {:>5} <= {:<4}{}",
                t.group,
                t.h_order,
                t.p,
                t.rho0.to_string(),
                t.bound.to_string(),
                if t.equality {
                    "  <- equality attained (noteworthy)"
                } else {
                    ""
                }
            );
            if t.equality {
                let eq = t.equality_conditions.as_ref().unwrap();
                println!(
                    "{:14} equality forces (2p-1) | |H| and |G| = p(2p-1)m, m < |H|: m = {:?}",
                    "", eq.m
                );
            }
        }
        let cor = verify_corollary(&g, &subs, &rep)?;
        assert!(cor.all_hold);
        if let Some(pg) = &cor.p_group_case {
            println!("{:14} {}-group branch: rho0 = 1 confirmed", "", pg.p);
        }
    }
    Ok(())
}
