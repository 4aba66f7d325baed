//! Matrix multiplication through a group algebra.
//!
//! Finds the maximal (3,3,3) triple of the order-21 group, embeds a pair of
//! 3x3 integer matrices into the group algebra, convolves, and reads the
//! product back, comparing against the naive triple loop. Also shows the
//! refusal branch for a non-TPP triple.
//!
//! ```bash
//! cargo run --example matmul_via_group
//! ```

use tppforge::matmul::{group_algebra_multiply, naive_multiply, IndexedMatrix};
use tppforge::search::capacity;
use tppforge::{parse_group_spec, Error, GroupTable, Result, SearchConfig, TppTriple};

fn main() -> Result<()> {
    let g = GroupTable::build(&parse_group_spec("sd:7,3,2")?)?;
    let rep = capacity(&g, &SearchConfig::default())?;
    let tr = rep.witnesses[0];
    println!(
        "witness triple of type {:?} in {}:",
        tr.params(),
        g.display_name()
    );
    println!(
        "  S = {:?}, T = {:?}, U = {:?}",
        tr.s.to_vec(),
        tr.t.to_vec(),
        tr.u.to_vec()
    );

    let a = IndexedMatrix::from_rows(
        tr.s.to_vec(),
        tr.t.to_vec(),
        &[vec![2, -1, 0], vec![3, 4, -5], vec![1, 0, 6]],
    )?;
    let b = IndexedMatrix::from_rows(
        tr.t.to_vec(),
        tr.u.to_vec(),
        &[vec![7, 1, -2], vec![0, 3, 4], vec![-6, 2, 5]],
    )?;
    let via_group = group_algebra_multiply(&g, &tr, &a, &b)?;
    let naive = naive_multiply(&a, &b)?;
    println!("  product rows (through the group algebra): {:?}", via_group.to_rows());
    println!("  matches the naive product: {}", via_group == naive);

    // A non-TPP triple is refused: without the TPP the readout at s^-1 u
    // would mix unrelated terms.
    let c4 = GroupTable::build(&parse_group_spec("cyclic:4")?)?;
    let bad = TppTriple::from_indices(&c4, &[0, 1], &[0, 1], &[0, 1])?;
    let a2 = IndexedMatrix::from_rows(vec![0, 1], vec![0, 1], &[vec![1, 2], vec![3, 4]])?;
    match group_algebra_multiply(&c4, &bad, &a2, &a2) {
        Err(Error::NotATppTriple) => println!("  non-TPP triple correctly refused"),
        other => panic!("expected refusal, got {other:?}"),
    }
    Ok(())
}
