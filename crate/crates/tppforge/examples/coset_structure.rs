//! Coset decompositions of TPP triples.
//!
//! Decomposes subgroup triples along an abelian normal subgroup H: supports
//! (which cosets each set meets), slices, the H-restriction, the counting
//! bound `|S||T||U| <= (sigma tau upsilon / n)|G|`, and the slice-product
//! laws that drive the prime-index capacity bound.
//!
//! ```bash
//! cargo run --example coset_structure
//! ```

use tppforge::search::subgroup_capacity;
use tppforge::structure::{abelian_coset_bound, lemma_coset_checks, CosetDecomposition};
use tppforge::subgroups::{enumerate_subgroups, find_abelian_normal_prime_index};
use tppforge::{parse_group_spec, GroupTable, Result};

fn main() -> Result<()> {
    for text in ["dihedral:6", "sd:7,3,2"] {
        let g = GroupTable::build(&parse_group_spec(text)?)?;
        let subs = enumerate_subgroups(&g)?;
        let rep = subgroup_capacity(&g)?;
        let witness = rep.witnesses[0];
        println!(
            "{text}: maximal subgroup triple of type {:?}, size {}",
            witness.params(),
            witness.size()
        );

        for (h, p) in find_abelian_normal_prime_index(&g, &subs) {
            let dec = CosetDecomposition::new(&g, &h, &witness)?;
            println!(
                "  over the abelian normal subgroup of order {} (index {p}):",
                h.order
            );
            println!(
                "    supports: sigma={}, tau={}, upsilon={} of {} cosets",
                dec.support_sizes[0], dec.support_sizes[1], dec.support_sizes[2], dec.n_index
            );
            println!(
                "    restriction sizes: |S0|={}, |T0|={}, |U0|={}",
                dec.restriction[0].len(),
                dec.restriction[1].len(),
                dec.restriction[2].len()
            );

            let bound = abelian_coset_bound(&g, &witness, &h)?;
            println!(
                "    counting bound: {} <= {} (supports divide index and sizes: {})",
                bound.lhs, bound.rhs, bound.divisors_ok
            );

            let laws = lemma_coset_checks(&g, &witness, &h)?;
            println!(
                "    slice-product laws: base |S0 T0 U0| = {}, {} coset checks, \
                 pairwise-distinctness applicable: {}, all passed: {}",
                laws.base_order,
                laws.part1.len(),
                laws.part2_applicable,
                laws.all_passed
            );
        }
        println!();
    }
    Ok(())
}
