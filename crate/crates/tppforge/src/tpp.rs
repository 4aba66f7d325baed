//! The triple product property: predicates, quotient sets, invariance
//! transforms, restriction, and the elementary size bounds.
//!
//! Three non-empty subsets S, T, U of a group satisfy the TPP when
//! `s's^-1 t't^-1 u'u^-1 = 1` forces `s = s'`, `t = t'`, `u = u'`. Two
//! equivalent tests are provided: the sextuple-loop definition (the slow,
//! trusted oracle) and the quotient-set characterisation
//! `Q(S) meet Q(T)Q(U) = Q(T) meet Q(U) = {1}` used everywhere else.

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroups::{is_subgroup, SubgroupRecord};

/// A triple of non-empty element sets with its cached parameters.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct TppTriple {
    pub s: ElementSet,
    pub t: ElementSet,
    pub u: ElementSet,
    params: [usize; 3],
    size: u64,
    basic: bool,
}

impl TppTriple {
    /// Wraps three sets, caching type, size, and basicness.
    ///
    /// `basic` means the three sets intersect exactly in the identity.
    pub fn new(s: ElementSet, t: ElementSet, u: ElementSet) -> Result<Self> {
        for (set, name) in [(&s, "S"), (&t, "T"), (&u, "U")] {
            if set.is_empty() {
                return Err(Error::EmptySet(match name {
                    "S" => "S",
                    "T" => "T",
                    _ => "U",
                }));
            }
        }
        if s.capacity() != t.capacity() || t.capacity() != u.capacity() {
            return Err(Error::InvalidTriple(
                "sets have different ambient group orders".into(),
            ));
        }
        let params = [s.len(), t.len(), u.len()];
        let size = params.iter().map(|&p| p as u64).product();
        let common = s.intersection(&t).intersection(&u);
        let basic = common.len() == 1 && common.contains(0);
        Ok(TppTriple {
            s,
            t,
            u,
            params,
            size,
            basic,
        })
    }

    pub fn from_indices(
        g: &GroupTable,
        s: &[usize],
        t: &[usize],
        u: &[usize],
    ) -> Result<Self> {
        let n = g.order();
        for idx in s.iter().chain(t).chain(u) {
            if *idx >= n {
                return Err(Error::InvalidTriple(format!(
                    "element index {idx} outside 0..{n}"
                )));
            }
        }
        TppTriple::new(
            ElementSet::from_indices(n, s),
            ElementSet::from_indices(n, t),
            ElementSet::from_indices(n, u),
        )
    }

    /// Parameter type `(|S|, |T|, |U|)`.
    pub fn params(&self) -> [usize; 3] {
        self.params
    }

    /// `|S| * |T| * |U|`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// True when `S meet T meet U = {1}`.
    pub fn is_basic(&self) -> bool {
        self.basic
    }

    pub fn sets(&self) -> [&ElementSet; 3] {
        [&self.s, &self.t, &self.u]
    }
}

impl std::fmt::Debug for TppTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "TppTriple(S={:?}, T={:?}, U={:?})",
            self.s, self.t, self.u
        )
    }
}

/// The quotient set `Q(X, Y) = { x y^-1 : x in X, y in Y }`.
pub fn quotient_set(g: &GroupTable, x: &ElementSet, y: &ElementSet) -> Result<ElementSet> {
    if x.is_empty() {
        return Err(Error::EmptySet("X"));
    }
    if y.is_empty() {
        return Err(Error::EmptySet("Y"));
    }
    let mut out = ElementSet::empty(g.order());
    for a in x.iter() {
        for b in y.iter() {
            out.insert(g.mul(a, g.inv(b)));
        }
    }
    Ok(out)
}

/// `Q(X) = Q(X, X)`.
pub fn self_quotient_set(g: &GroupTable, x: &ElementSet) -> Result<ElementSet> {
    quotient_set(g, x, x)
}

/// The sextuple-loop TPP test, straight from the definition.
///
/// Cost is O(|S|^2 |T|^2 |U|^2) with early exit; this is the trusted oracle
/// used for cross-validation and final witness checks, not for search.
pub fn is_tpp_definitional(g: &GroupTable, tr: &TppTriple) -> bool {
    let s: Vec<usize> = tr.s.to_vec();
    let t: Vec<usize> = tr.t.to_vec();
    let u: Vec<usize> = tr.u.to_vec();
    for &s1 in &s {
        for &s0 in &s {
            let p1 = g.mul(s1, g.inv(s0));
            for &t1 in &t {
                let p2 = g.mul(p1, t1);
                for &t0 in &t {
                    let p3 = g.mul(p2, g.inv(t0));
                    for &u1 in &u {
                        let p4 = g.mul(p3, u1);
                        for &u0 in &u {
                            if g.mul(p4, g.inv(u0)) == 0
                                && (s1 != s0 || t1 != t0 || u1 != u0)
                            {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// The quotient-set TPP test:
/// `Q(T) meet Q(U) = {1}` and `Q(S) meet Q(T)Q(U) = {1}`.
///
/// Agrees with [`is_tpp_definitional`] on every input (a tested property).
pub fn is_tpp_quotient(g: &GroupTable, tr: &TppTriple) -> bool {
    let qt = self_quotient_set(g, &tr.t).expect("triple sets are non-empty");
    let qu = self_quotient_set(g, &tr.u).expect("triple sets are non-empty");
    if !qt.meets_only_at_identity(&qu) {
        return false;
    }
    let qs = self_quotient_set(g, &tr.s).expect("triple sets are non-empty");
    let qtqu = g.set_product(&qt, &qu);
    qs.meets_only_at_identity(&qtqu)
}

/// Subgroup form of the TPP: `S meet TU = {1}` and `T meet U = {1}`.
///
/// Valid only when all three sets are subgroups, in which case it agrees
/// with [`is_tpp_quotient`] on the underlying sets.
pub fn is_subgroup_tpp(
    g: &GroupTable,
    s: &SubgroupRecord,
    t: &SubgroupRecord,
    u: &SubgroupRecord,
) -> bool {
    subgroup_tpp_sets_unchecked(g, &s.elements, &t.elements, &u.elements)
}

/// Same test on raw sets, verifying subgroup closure first.
pub fn is_subgroup_tpp_sets(
    g: &GroupTable,
    s: &ElementSet,
    t: &ElementSet,
    u: &ElementSet,
) -> Result<bool> {
    for set in [s, t, u] {
        if !is_subgroup(g, set) {
            return Err(Error::NotASubgroup(format!("{set:?}")));
        }
    }
    Ok(subgroup_tpp_sets_unchecked(g, s, t, u))
}

pub(crate) fn subgroup_tpp_sets_unchecked(
    g: &GroupTable,
    s: &ElementSet,
    t: &ElementSet,
    u: &ElementSet,
) -> bool {
    if !t.meets_only_at_identity(u) {
        return false;
    }
    let tu = g.set_product(t, u);
    s.meets_only_at_identity(&tu)
}

/// All six slot permutations.
pub const ALL_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Permutes the three slots: slot `i` of the result is slot `perm[i]` of the
/// input. TPP status is preserved (a tested property).
pub fn apply_permutation(tr: &TppTriple, perm: [usize; 3]) -> TppTriple {
    assert!(ALL_PERMS.contains(&perm), "not a permutation of 3 slots");
    let sets = tr.sets();
    TppTriple::new(*sets[perm[0]], *sets[perm[1]], *sets[perm[2]])
        .expect("permutation preserves non-emptiness")
}

/// Translates the triple to `(dSa, dTb, dUc)`. TPP status and cardinalities
/// are preserved (a tested property).
pub fn apply_translation(
    g: &GroupTable,
    tr: &TppTriple,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> TppTriple {
    let move_set = |set: &ElementSet, right: usize| -> ElementSet {
        let mut out = ElementSet::empty(g.order());
        for x in set.iter() {
            out.insert(g.mul(g.mul(d, x), right));
        }
        out
    };
    TppTriple::new(move_set(&tr.s, a), move_set(&tr.t, b), move_set(&tr.u, c))
        .expect("translation preserves non-emptiness")
}

/// Right-translates each set by the inverse of its minimal member, producing
/// a triple that contains the identity in all three slots.
///
/// For a TPP input the result is basic with the same type and size; for a
/// non-TPP input basicness is not guaranteed, so the input is checked.
pub fn normalize_to_basic(g: &GroupTable, tr: &TppTriple) -> Result<TppTriple> {
    if !is_tpp_quotient(g, tr) {
        return Err(Error::NotATppTriple);
    }
    let anchor = |set: &ElementSet| -> usize {
        g.inv(set.min_element().expect("triple sets are non-empty"))
    };
    let shifted = |set: &ElementSet| g.right_mul_set(set, anchor(set));
    let out = TppTriple::new(shifted(&tr.s), shifted(&tr.t), shifted(&tr.u))
        .expect("translation preserves non-emptiness");
    debug_assert!(out.is_basic());
    debug_assert_eq!(out.params(), tr.params());
    Ok(out)
}

/// The intersected triple `(S meet H, T meet H, U meet H)`.
///
/// When the input satisfies the TPP and all three intersections are
/// non-empty, the result satisfies the TPP inside `H`.
pub struct Restriction {
    pub s: ElementSet,
    pub t: ElementSet,
    pub u: ElementSet,
}

impl Restriction {
    /// Which of the three intersections came out empty.
    pub fn empty_slots(&self) -> [bool; 3] {
        [self.s.is_empty(), self.t.is_empty(), self.u.is_empty()]
    }

    /// The restricted triple, if every slot is non-empty.
    pub fn as_triple(&self) -> Option<TppTriple> {
        TppTriple::new(self.s, self.t, self.u).ok()
    }
}

pub fn restrict_to_subgroup(tr: &TppTriple, h: &SubgroupRecord) -> Restriction {
    Restriction {
        s: tr.s.intersection(&h.elements),
        t: tr.t.intersection(&h.elements),
        u: tr.u.intersection(&h.elements),
    }
}

/// The pair bound: a TPP triple of type `(a, b, c)` requires
/// `x(y + z - 1) <= n` for every ordering `(x, y, z)` of the parameters.
pub fn neumann_pair_bound_ok(sizes: (u64, u64, u64), group_order: u64) -> bool {
    let (a, b, c) = sizes;
    a * (b + c - 1) <= group_order
        && b * (a + c - 1) <= group_order
        && c * (a + b - 1) <= group_order
}

/// The capacity bound `floor(((1 + sqrt(1 + 8n)) / 4)^3)`, computed exactly.
///
/// When `1 + 8n` is a perfect square the cube is rational with denominator
/// 64 and the division floors it. Otherwise, writing the cube as
/// `((1 + 3D) + (3 + D) sqrt(D)) / 64` with `D = 1 + 8n`, the floor of the
/// irrational part is `isqrt((3 + D)^2 D)`, and since the total is
/// irrational the outer floor commutes with replacing the term by its floor.
pub fn neumann_capacity_bound(group_order: u64) -> u64 {
    assert!(group_order >= 1);
    let d = 1 + 8 * group_order;
    let s = d.isqrt();
    if s * s == d {
        let cube = (1 + s as u128).pow(3);
        (cube / 64) as u64
    } else {
        let irr = ((3 + d) as u128).pow(2) * d as u128;
        let total = (1 + 3 * d) as u128 + irr.isqrt();
        (total / 64) as u64
    }
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use crate::group::GroupSpec;
    use proptest::prelude::*;

    fn group_for(index: usize) -> GroupTable {
        let spec = match index {
            0 => GroupSpec::Cyclic(6),
            1 => GroupSpec::Cyclic(8),
            2 => GroupSpec::Dihedral(3),
            3 => GroupSpec::Dihedral(4),
            4 => GroupSpec::Semidirect { n: 5, m: 4, k: 2 },
            _ => GroupSpec::DirectProduct(
                Box::new(GroupSpec::Cyclic(3)),
                Box::new(GroupSpec::Cyclic(3)),
            ),
        };
        GroupTable::build(&spec).unwrap()
    }

    fn set_from_mask(n: usize, mask: u8) -> ElementSet {
        let mut out = ElementSet::empty(n);
        for i in 0..8 {
            if mask >> i & 1 == 1 {
                out.insert(i % n);
            }
        }
        if out.is_empty() {
            out.insert(0);
        }
        out
    }

    proptest! {
        // The two TPP tests must agree everywhere.
        #[test]
        fn definitional_and_quotient_tests_agree(
            gi in 0..6usize,
            s in any::<u8>(),
            t in any::<u8>(),
            u in any::<u8>(),
        ) {
            let g = group_for(gi);
            let n = g.order();
            let tr = TppTriple::new(
                set_from_mask(n, s),
                set_from_mask(n, t),
                set_from_mask(n, u),
            )
            .unwrap();
            prop_assert_eq!(is_tpp_definitional(&g, &tr), is_tpp_quotient(&g, &tr));
        }

        // Slot permutations and translations never change TPP status.
        #[test]
        fn transforms_preserve_status(
            gi in 0..6usize,
            s in any::<u8>(),
            t in any::<u8>(),
            u in any::<u8>(),
            perm_idx in 0..6usize,
            trans in any::<[u8; 4]>(),
        ) {
            let g = group_for(gi);
            let n = g.order();
            let tr = TppTriple::new(
                set_from_mask(n, s),
                set_from_mask(n, t),
                set_from_mask(n, u),
            )
            .unwrap();
            let status = is_tpp_quotient(&g, &tr);

            let permuted = apply_permutation(&tr, ALL_PERMS[perm_idx]);
            prop_assert_eq!(is_tpp_quotient(&g, &permuted), status);

            let [a, b, c, d] = trans.map(|x| x as usize % n);
            let moved = apply_translation(&g, &tr, a, b, c, d);
            prop_assert_eq!(is_tpp_quotient(&g, &moved), status);
            prop_assert_eq!(moved.params(), tr.params());
        }

        // Normalization of a TPP triple yields a basic triple of the same
        // type; quotient sets are inverse-closed.
        #[test]
        fn normalization_and_quotient_symmetry(
            gi in 0..6usize,
            s in any::<u8>(),
            t in any::<u8>(),
        ) {
            let g = group_for(gi);
            let n = g.order();
            let x = set_from_mask(n, s);
            let q = self_quotient_set(&g, &x).unwrap();
            prop_assert_eq!(g.set_inverse(&q), q);
            prop_assert!(q.contains(0));

            let tr = TppTriple::new(x, set_from_mask(n, t), ElementSet::identity_only(n)).unwrap();
            if is_tpp_quotient(&g, &tr) {
                let basic = normalize_to_basic(&g, &tr).unwrap();
                prop_assert!(basic.is_basic());
                prop_assert_eq!(basic.params(), tr.params());
                prop_assert!(is_tpp_quotient(&g, &basic));
            }
        }
    }
}
