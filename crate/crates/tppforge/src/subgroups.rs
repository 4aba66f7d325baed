//! Subgroup enumeration, normality and abelianness flags, cosets, quotients.

use std::collections::BTreeMap;

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::util::{is_prime, order_cap};

/// A subgroup of a fixed ambient group, with the flags the rest of the crate
/// keys on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub elements: ElementSet,
    pub order: usize,
    pub index: usize,
    pub is_normal: bool,
    pub is_abelian: bool,
}

impl SubgroupRecord {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// A subgroup is cyclic iff some member has order equal to the subgroup
    /// order.
    pub fn is_cyclic(&self, g: &GroupTable) -> bool {
        self.elements.iter().any(|e| g.element_order(e) == self.order)
    }
}

/// Closes `seed` under multiplication. In a finite group this yields a
/// subgroup (inverses come for free from element orders).
pub fn close_under_mul(g: &GroupTable, seed: &ElementSet) -> ElementSet {
    let mut set = *seed;
    set.insert(0);
    let mut worklist: Vec<usize> = set.to_vec();
    while let Some(x) = worklist.pop() {
        for y in set.to_vec() {
            for p in [g.mul(x, y), g.mul(y, x)] {
                if !set.contains(p) {
                    set.insert(p);
                    worklist.push(p);
                }
            }
        }
    }
    set
}

/// True when `set` contains the identity and is closed under the group
/// operation and inverses.
pub fn is_subgroup(g: &GroupTable, set: &ElementSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    for a in set.iter() {
        if !set.contains(g.inv(a)) {
            return false;
        }
        for b in set.iter() {
            if !set.contains(g.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

fn is_normal_in(g: &GroupTable, set: &ElementSet) -> bool {
    for x in 0..g.order() {
        for h in set.iter() {
            let conj = g.mul(g.mul(x, h), g.inv(x));
            if !set.contains(conj) {
                return false;
            }
        }
    }
    true
}

fn is_abelian_set(g: &GroupTable, set: &ElementSet) -> bool {
    let elems = set.to_vec();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            if g.mul(a, b) != g.mul(b, a) {
                return false;
            }
        }
    }
    true
}

/// Builds a [`SubgroupRecord`] from a verified-closed element set.
pub fn record_for(g: &GroupTable, elements: ElementSet) -> Result<SubgroupRecord> {
    if !is_subgroup(g, &elements) {
        return Err(Error::NotASubgroup(format!("{elements:?}")));
    }
    let order = elements.len();
    assert_eq!(
        g.order() % order,
        0,
        "subgroup order must divide the group order"
    );
    Ok(SubgroupRecord {
        order,
        index: g.order() / order,
        is_normal: is_normal_in(g, &elements),
        is_abelian: is_abelian_set(g, &elements),
        elements,
    })
}

/// Enumerates every subgroup of `g`, each exactly once, sorted by
/// (order, element list).
///
/// Strategy: seed with all cyclic subgroups, then repeatedly close the union
/// of a known subgroup with one extra generator until no new subgroups
/// appear. Every subgroup arises along some generator chain, so this is
/// exhaustive.
pub fn enumerate_subgroups(g: &GroupTable) -> Result<Vec<SubgroupRecord>> {
    let cap = order_cap();
    if g.order() > cap {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap,
        });
    }
    let mut seen: BTreeMap<(usize, Vec<usize>), ElementSet> = BTreeMap::new();
    let mut frontier: Vec<ElementSet> = Vec::new();
    for e in 0..g.order() {
        let cyc = close_under_mul(g, &ElementSet::singleton(g.order(), e));
        if seen.insert(cyc.canonical_key(), cyc).is_none() {
            frontier.push(cyc);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for e in 0..g.order() {
                if h.contains(e) {
                    continue;
                }
                let mut seed = *h;
                seed.insert(e);
                let closed = close_under_mul(g, &seed);
                if seen.insert(closed.canonical_key(), closed).is_none() {
                    next.push(closed);
                }
            }
        }
        frontier = next;
    }
    seen.into_values().map(|els| record_for(g, els)).collect()
}

/// All `(H, p)` with `H` abelian, normal, of prime index `p`.
pub fn find_abelian_normal_prime_index(
    _g: &GroupTable,
    subgroups: &[SubgroupRecord],
) -> Vec<(SubgroupRecord, usize)> {
    subgroups
        .iter()
        .filter(|h| h.is_abelian && h.is_normal && is_prime(h.index))
        .map(|h| (h.clone(), h.index))
        .collect()
}

/// All `(H, p)` with `H` cyclic, normal, of prime index `p` (the hypothesis
/// of the full-capacity conjecture scan).
pub fn find_cyclic_normal_prime_index(
    g: &GroupTable,
    subgroups: &[SubgroupRecord],
) -> Vec<(SubgroupRecord, usize)> {
    subgroups
        .iter()
        .filter(|h| h.is_normal && is_prime(h.index) && h.is_cyclic(g))
        .map(|h| (h.clone(), h.index))
        .collect()
}

/// Left-coset decomposition of a group by a subgroup: representatives plus
/// the element-to-coset map. The coset of the identity is `H` itself and has
/// index 0.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub reps: Vec<usize>,
    pub coset_of: Vec<usize>,
    pub subgroup_order: usize,
}

impl CosetTable {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Elements of coset `i` as a set.
    pub fn coset_elements(&self, g: &GroupTable, i: usize) -> ElementSet {
        let mut out = ElementSet::empty(g.order());
        for (e, &c) in self.coset_of.iter().enumerate() {
            if c == i {
                out.insert(e);
            }
        }
        out
    }
}

/// Computes the left cosets `xH`, scanning representatives in index order so
/// the decomposition is deterministic.
pub fn coset_table(g: &GroupTable, h: &SubgroupRecord) -> Result<CosetTable> {
    if !is_subgroup(g, &h.elements) {
        return Err(Error::NotASubgroup(format!("{:?}", h.elements)));
    }
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::with_capacity(h.index);
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for m in h.elements.iter() {
            coset_of[g.mul(x, m)] = idx;
        }
    }
    debug_assert_eq!(reps.len(), g.order() / h.order);
    debug_assert_eq!(coset_of[0], 0);
    Ok(CosetTable {
        reps,
        coset_of,
        subgroup_order: h.order,
    })
}

/// Multiplication table of `G/H` for a normal subgroup `H`, with the coset of
/// the identity at index 0.
pub fn quotient_table(g: &GroupTable, h: &SubgroupRecord, cosets: &CosetTable) -> Result<GroupTable> {
    if !h.is_normal {
        return Err(Error::NotNormal);
    }
    let q = cosets.count();
    let mut mul = vec![0u16; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = cosets.coset_of[g.mul(cosets.reps[a], cosets.reps[b])] as u16;
        }
    }
    let labels = cosets
        .reps
        .iter()
        .map(|&r| format!("{}H", g.label(r)))
        .collect();
    GroupTable::from_raw(q, mul, Some(labels), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{verify_group_axioms, GroupSpec};

    fn build(spec: GroupSpec) -> GroupTable {
        GroupTable::build(&spec).unwrap()
    }

    #[test]
    fn cyclic_six_has_four_subgroups() {
        let g = build(GroupSpec::Cyclic(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert!(subs.iter().all(|s| s.is_normal && s.is_abelian));
    }

    #[test]
    fn symmetric_three_has_six_subgroups() {
        // dihedral(3) is the symmetric group on three letters
        let g = build(GroupSpec::Dihedral(3));
        let subs = enumerate_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let order3 = subs.iter().find(|s| s.order == 3).unwrap();
        assert!(order3.is_normal);
        assert!(order3.is_cyclic(&g));
        let order2 = subs.iter().find(|s| s.order == 2).unwrap();
        assert!(!order2.is_normal);
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = build(GroupSpec::Cyclic(1));
        let subs = enumerate_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order, 1);
    }

    #[test]
    fn lagrange_holds_across_small_groups() {
        for spec in [
            GroupSpec::Dihedral(6),
            GroupSpec::Semidirect { n: 7, m: 3, k: 2 },
            GroupSpec::Cyclic(12),
        ] {
            let g = build(spec);
            for s in enumerate_subgroups(&g).unwrap() {
                assert_eq!(g.order() % s.order, 0);
                assert_eq!(s.index, g.order() / s.order);
                // The cosets partition G into |G:H| blocks of size |H|.
                let ct = coset_table(&g, &s).unwrap();
                assert_eq!(ct.count(), s.index);
                let total: usize = (0..ct.count())
                    .map(|i| ct.coset_elements(&g, i).len())
                    .sum();
                assert_eq!(total, g.order());
                assert!((0..ct.count()).all(|i| ct.coset_elements(&g, i).len() == s.order));
            }
        }
    }

    #[test]
    fn dihedral_six_rotation_subgroup() {
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let rot = subs
            .iter()
            .find(|s| s.order == 6 && s.elements.contains(1))
            .expect("rotation subgroup");
        assert!(rot.is_normal);
        assert!(rot.is_abelian);
        assert_eq!(rot.index, 2);
        assert_eq!(rot.elements.to_vec(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn abelian_normal_prime_index_examples() {
        let d6 = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&d6).unwrap();
        let found = find_abelian_normal_prime_index(&d6, &subs);
        assert!(found.iter().any(|(h, p)| h.order == 6 && *p == 2));

        let f21 = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&f21).unwrap();
        let found = find_abelian_normal_prime_index(&f21, &subs);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0.order, 7);
        assert_eq!(found[0].1, 3);

        let c1 = build(GroupSpec::Cyclic(1));
        let subs = enumerate_subgroups(&c1).unwrap();
        assert!(find_abelian_normal_prime_index(&c1, &subs).is_empty());
    }

    #[test]
    fn coset_partition() {
        let g = build(GroupSpec::Dihedral(4));
        let subs = enumerate_subgroups(&g).unwrap();
        let rot = subs
            .iter()
            .find(|s| s.order == 4 && s.elements.contains(1))
            .unwrap();
        let ct = coset_table(&g, rot).unwrap();
        assert_eq!(ct.count(), 2);
        assert_eq!(ct.coset_elements(&g, 0).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(ct.coset_elements(&g, 1).to_vec(), vec![4, 5, 6, 7]);

        // G over itself: a single coset.
        let whole = subs.iter().find(|s| s.order == 8).unwrap();
        assert_eq!(coset_table(&g, whole).unwrap().count(), 1);

        // The order-21 group over its order-7 subgroup: three cosets of size 7.
        let f21 = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&f21).unwrap();
        let c7 = subs.iter().find(|s| s.order == 7).unwrap();
        let ct = coset_table(&f21, c7).unwrap();
        assert_eq!(ct.count(), 3);
        for i in 0..3 {
            assert_eq!(ct.coset_elements(&f21, i).len(), 7);
        }
    }

    #[test]
    fn quotient_passes_axioms() {
        for spec in [
            GroupSpec::Dihedral(6),
            GroupSpec::Semidirect { n: 7, m: 3, k: 2 },
            GroupSpec::Cyclic(12),
        ] {
            let g = build(spec);
            for h in enumerate_subgroups(&g).unwrap() {
                let ct = coset_table(&g, &h).unwrap();
                if h.is_normal {
                    let q = quotient_table(&g, &h, &ct).unwrap();
                    assert!(verify_group_axioms(&q));
                    assert_eq!(q.order(), h.index);
                } else {
                    assert!(quotient_table(&g, &h, &ct).is_err());
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let g = build(GroupSpec::Dihedral(8));
        let a = enumerate_subgroups(&g).unwrap();
        let b = enumerate_subgroups(&g).unwrap();
        assert_eq!(a, b);
    }
}
