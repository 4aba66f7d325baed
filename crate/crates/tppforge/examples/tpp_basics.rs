//! The triple product property from first principles.
//!
//! Demonstrates quotient sets, the two equivalent TPP tests, permutation
//! and translation invariance, and normalization to basic triples.
//!
//! ```bash
//! cargo run --example tpp_basics
//! ```

use tppforge::tpp::{
    apply_permutation, apply_translation, is_tpp_definitional, is_tpp_quotient,
    normalize_to_basic, self_quotient_set,
};
use tppforge::{parse_group_spec, GroupTable, Result, TppTriple};

fn show(g: &GroupTable, tr: &TppTriple, name: &str) {
    let by_def = is_tpp_definitional(g, tr);
    let by_quot = is_tpp_quotient(g, tr);
    assert_eq!(by_def, by_quot, "the two tests are equivalent");
    println!(
        "  {name}: type {:?}, size {}, TPP: {}",
        tr.params(),
        tr.size(),
        by_def
    );
}

fn main() -> Result<()> {
    // The symmetric group on three letters, as the order-6 dihedral group:
    // elements 0..3 are rotations, 3..6 are the three reflections.
    let g = GroupTable::build(&parse_group_spec("dihedral:3")?)?;

    println!("quotient sets in {}:", g.display_name());
    for indices in [vec![0], vec![0, 3], vec![0, 1]] {
        let set = tppforge::ElementSet::from_indices(6, &indices);
        let q = self_quotient_set(&g, &set)?;
        println!("  Q({set:?}) = {q:?}");
    }

    println!("\ntriples of reflection subgroups:");
    // Two distinct reflections and the identity: a TPP triple of size 4.
    let small = TppTriple::from_indices(&g, &[0, 3], &[0, 4], &[0])?;
    show(&g, &small, "({{e,s}}, {{e,rs}}, {{e}})");

    // All three reflection subgroups: size 8 > |G| = 6. This is the
    // classic example showing a group can beat its own order.
    let best = TppTriple::from_indices(&g, &[0, 3], &[0, 4], &[0, 5])?;
    show(&g, &best, "three reflection subgroups");

    // The whole rotation subgroup against two reflections fails.
    let bad = TppTriple::from_indices(&g, &[0, 1, 2], &[0, 3], &[0, 4])?;
    show(&g, &bad, "rotations against two reflections");

    println!("\ninvariance:");
    let permuted = apply_permutation(&best, [2, 0, 1]);
    show(&g, &permuted, "after rotating the slots");
    let translated = apply_translation(&g, &best, 1, 2, 4, 5);
    show(&g, &translated, "after translating each set");
    let back = normalize_to_basic(&g, &translated)?;
    show(&g, &back, "re-normalized to a basic triple");
    assert!(back.is_basic());

    Ok(())
}
