//! Shared helpers for the integration suites: the unpruned capacity oracle
//! and seeded random-set sampling.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use tppforge::bits::ElementSet;
use tppforge::group::GroupTable;
use tppforge::tpp::{is_tpp_quotient, TppTriple};

/// Unpruned capacity: enumerates every triple of subsets containing the
/// identity (every TPP triple translates to one of those) and takes the
/// maximum size over those satisfying the TPP. No type enumeration, no
/// symmetry breaking, no incremental pruning — this is the independent
/// oracle for the search engine, feasible through order 10.
pub fn naive_capacity(g: &GroupTable) -> u64 {
    let n = g.order();
    assert!(n <= 10, "the naive oracle is exponential; keep it small");
    let masks = 1usize << (n - 1);
    // Subset for mask m: identity plus {i+1 : bit i of m}.
    let sets: Vec<ElementSet> = (0..masks)
        .map(|m| {
            let mut s = ElementSet::identity_only(n);
            for i in 0..n - 1 {
                if m >> i & 1 == 1 {
                    s.insert(i + 1);
                }
            }
            s
        })
        .collect();
    let quotients: Vec<ElementSet> = sets
        .iter()
        .map(|s| {
            let mut q = ElementSet::empty(n);
            for a in s.iter() {
                for b in s.iter() {
                    q.insert(g.mul(a, g.inv(b)));
                }
            }
            q
        })
        .collect();

    let mut best = 0u64;
    for (ti, t) in sets.iter().enumerate() {
        for (ui, u) in sets.iter().enumerate() {
            if !quotients[ti].meets_only_at_identity(&quotients[ui]) {
                continue;
            }
            let qtqu = g.set_product(&quotients[ti], &quotients[ui]);
            for (si, s) in sets.iter().enumerate() {
                if quotients[si].meets_only_at_identity(&qtqu) {
                    let size = (s.len() * t.len() * u.len()) as u64;
                    if size > best {
                        best = size;
                        debug_assert!(is_tpp_quotient(
                            g,
                            &TppTriple::new(sets[si], sets[ti], sets[ui]).unwrap()
                        ));
                    }
                }
            }
        }
    }
    best
}

/// A random non-empty subset of small biased size.
pub fn random_set(g: &GroupTable, rng: &mut StdRng) -> ElementSet {
    let n = g.order();
    let max = n.min(5);
    let k = rng.random_range(1..=max);
    let mut s = ElementSet::empty(n);
    while s.len() < k {
        s.insert(rng.random_range(0..n));
    }
    s
}

/// A random triple (not necessarily TPP).
pub fn random_triple(g: &GroupTable, rng: &mut StdRng) -> TppTriple {
    TppTriple::new(random_set(g, rng), random_set(g, rng), random_set(g, rng))
        .expect("random sets are non-empty")
}

/// A random integer matrix with entries in [-9, 9] indexed by two element
/// lists.
pub fn random_matrix(
    rows: &[usize],
    cols: &[usize],
    rng: &mut StdRng,
) -> tppforge::matmul::IndexedMatrix {
    let entries = (0..rows.len() * cols.len())
        .map(|_| rng.random_range(-9..=9))
        .collect();
    tppforge::matmul::IndexedMatrix::new(rows.to_vec(), cols.to_vec(), entries).unwrap()
}
