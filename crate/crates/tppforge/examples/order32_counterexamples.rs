//! Two order-32 groups whose full capacity beats the subgroup bound.
//!
//! Both have an abelian (non-cyclic) normal subgroup of index 2, so their
//! subgroup capacity is capped at (4/3)*32; yet triples of *subsets* of
//! type (6,4,2) reach size 48, ratio 3/2. This is why the cyclic hypothesis
//! matters in the conjecture scan: these groups have no cyclic subgroup of
//! index 2.
//!
//! The tables ship as JSON under `data/` and are loaded through the
//! ingestion path here. Pass `--full` to also run the exhaustive full
//! search (about a minute per group; it confirms the capacity is exactly
//! 48).
//!
//! ```bash
//! cargo run --release --example order32_counterexamples [-- --full]
//! ```

use std::path::Path;

use tppforge::search::{capacity, find_triple_of_type, subgroup_capacity};
use tppforge::tpp::{is_tpp_definitional, is_tpp_quotient};
use tppforge::{parse_group_spec, GroupTable, Result, SearchConfig};

fn main() -> Result<()> {
    let full = std::env::args().any(|a| a == "--full");
    let cfg = SearchConfig {
        thread_count: 2,
        ..SearchConfig::default()
    };
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");

    for file in ["g32_11.json", "g32_27.json"] {
        let spec = parse_group_spec(&format!("file:{}", data.join(file).display()))?;
        let g = GroupTable::build(&spec)?;
        println!("{} (order {}):", g.display_name(), g.order());

        let b0 = subgroup_capacity(&g)?;
        println!(
            "  subgroup capacity {} (ratio {}), bound {} from the abelian index-2 subgroup",
            b0.capacity,
            b0.ratio,
            b0.theorem_bound.expect("index-2 abelian subgroup exists")
        );

        let rep = find_triple_of_type(&g, (6, 4, 2), &cfg)?;
        let w = rep.witnesses.first().expect("a (6,4,2) triple exists");
        assert!(is_tpp_quotient(&g, w) && is_tpp_definitional(&g, w));
        println!(
            "  subset triple of type (6,4,2): size {}, ratio {} > 4/3",
            w.size(),
            rep.ratio
        );
        println!(
            "    S = {:?}\n    T = {:?}\n    U = {:?}",
            w.s.to_vec(),
            w.t.to_vec(),
            w.u.to_vec()
        );

        if full {
            let b = capacity(&g, &cfg)?;
            println!(
                "  exhaustive full capacity: {} (exhausted: {}, {} nodes, {:?})",
                b.capacity, b.exhausted, b.nodes_explored, b.elapsed
            );
        } else {
            println!("  (rerun with --full for the exhaustive capacity search)");
        }
        println!();
    }
    Ok(())
}
