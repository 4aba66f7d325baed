//! Coset-decomposition diagnostics and the verification harness for the
//! subgroup-capacity bound.
//!
//! For a subgroup H of G and a triple (S, T, U), each set decomposes along
//! the left cosets of H into slices `S_x = S meet xH`; the cosets meeting S
//! form its H-support. When H is abelian and normal these supports and
//! slices obey exact counting laws, which cap the subgroup capacity at
//! `p^2/(2p-1) * |G|` whenever H has prime index p. This module computes
//! every one of those laws explicitly and checks them against search
//! results.

use num_rational::Ratio;

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::search::{SearchMode, SearchReport};
use crate::subgroups::{
    coset_table, find_abelian_normal_prime_index, find_cyclic_normal_prime_index, is_subgroup,
    quotient_table, CosetTable, SubgroupRecord,
};
use crate::tpp::{subgroup_tpp_sets_unchecked, TppTriple};
use crate::util::is_prime;

/// A triple decomposed along the left cosets of a subgroup.
pub struct CosetDecomposition {
    pub cosets: CosetTable,
    /// `|G : H|`.
    pub n_index: usize,
    /// Coset indices meeting S, T, U (the H-supports).
    pub supports: [ElementSet; 3],
    /// Support sizes (sigma, tau, upsilon).
    pub support_sizes: [usize; 3],
    /// Per coset x, the slices `S_x`, `T_x`, `U_x`.
    pub slices: Vec<[ElementSet; 3]>,
    /// The H-restriction `(S meet H, T meet H, U meet H)` = `slices[0]`.
    pub restriction: [ElementSet; 3],
}

impl CosetDecomposition {
    pub fn new(g: &GroupTable, h: &SubgroupRecord, tr: &TppTriple) -> Result<Self> {
        let cosets = coset_table(g, h)?;
        let n_index = cosets.count();
        let sets = [tr.s, tr.t, tr.u];
        let mut supports = [
            ElementSet::empty(n_index.max(1)),
            ElementSet::empty(n_index.max(1)),
            ElementSet::empty(n_index.max(1)),
        ];
        let mut slices = Vec::with_capacity(n_index);
        for x in 0..n_index {
            let coset = cosets.coset_elements(g, x);
            let slice = [
                sets[0].intersection(&coset),
                sets[1].intersection(&coset),
                sets[2].intersection(&coset),
            ];
            for slot in 0..3 {
                if !slice[slot].is_empty() {
                    supports[slot].insert(x);
                }
            }
            slices.push(slice);
        }
        // The slices partition each set.
        for slot in 0..3 {
            debug_assert_eq!(
                slices.iter().map(|s| s[slot].len()).sum::<usize>(),
                sets[slot].len()
            );
        }
        let restriction = slices[0];
        Ok(CosetDecomposition {
            cosets,
            n_index,
            support_sizes: [supports[0].len(), supports[1].len(), supports[2].len()],
            supports,
            slices,
            restriction,
        })
    }
}

/// The coset indices whose coset meets `s`.
pub fn h_support(g: &GroupTable, s: &ElementSet, h: &SubgroupRecord) -> Result<ElementSet> {
    if s.is_empty() {
        return Err(Error::EmptySet("S"));
    }
    let cosets = coset_table(g, h)?;
    let mut out = ElementSet::empty(cosets.count());
    for e in s.iter() {
        out.insert(cosets.coset_of[e]);
    }
    Ok(out)
}

/// For subgroups S and H: `|support(S)| = |S : S meet H|`.
pub fn support_index_identity(
    g: &GroupTable,
    s: &SubgroupRecord,
    h: &SubgroupRecord,
) -> Result<bool> {
    let support = h_support(g, &s.elements, h)?;
    let meet = s.elements.intersection(&h.elements);
    Ok(support.len() * meet.len() == s.order)
}

/// For a subgroup S and a normal subgroup H: the support of S is closed
/// under the induced multiplication of G/H.
pub fn support_subgroup_check(
    g: &GroupTable,
    s: &SubgroupRecord,
    h: &SubgroupRecord,
) -> Result<bool> {
    if !h.is_normal {
        return Err(Error::NotNormal);
    }
    let cosets = coset_table(g, h)?;
    let quotient = quotient_table(g, h, &cosets)?;
    let support = h_support(g, &s.elements, h)?;
    Ok(is_subgroup(&quotient, &support))
}

/// Outcome of the support counting bound
/// `|S||T||U| <= (sigma tau upsilon / n) |G|` for a subgroup triple and an
/// abelian normal H.
#[derive(Debug)]
pub struct CosetBoundReport {
    pub lhs: u64,
    pub rhs: Ratio<i64>,
    pub ok: bool,
    pub support_sizes: [usize; 3],
    /// Each support size divides both the quotient order and its own
    /// subgroup order.
    pub divisors_ok: bool,
}

fn require_subgroup_triple(g: &GroupTable, tr: &TppTriple) -> Result<()> {
    for set in [&tr.s, &tr.t, &tr.u] {
        if !is_subgroup(g, set) {
            return Err(Error::NotASubgroup(format!("{set:?}")));
        }
    }
    if !subgroup_tpp_sets_unchecked(g, &tr.s, &tr.t, &tr.u) {
        return Err(Error::NotATppTriple);
    }
    Ok(())
}

/// Computes both sides of the support bound exactly and asserts it.
pub fn abelian_coset_bound(
    g: &GroupTable,
    tr: &TppTriple,
    h: &SubgroupRecord,
) -> Result<CosetBoundReport> {
    if !h.is_normal {
        return Err(Error::NotNormal);
    }
    if !h.is_abelian {
        return Err(Error::NotAbelian);
    }
    require_subgroup_triple(g, tr)?;
    let dec = CosetDecomposition::new(g, h, tr)?;
    let [sigma, tau, upsilon] = dec.support_sizes;
    let n = dec.n_index;
    let lhs = tr.size();
    let rhs = Ratio::new((sigma * tau * upsilon) as i64, n as i64)
        * Ratio::from_integer(g.order() as i64);
    let ok = Ratio::from_integer(lhs as i64) <= rhs;
    let sizes = [tr.s.len(), tr.t.len(), tr.u.len()];
    let divisors_ok = dec
        .support_sizes
        .iter()
        .zip(sizes)
        .all(|(&sup, size)| n % sup == 0 && size % sup == 0);
    assert!(ok, "support bound violated; this is a bug or a counterexample");
    assert!(divisors_ok, "support sizes must divide the index and set sizes");
    Ok(CosetBoundReport {
        lhs,
        rhs,
        ok,
        support_sizes: dec.support_sizes,
        divisors_ok,
    })
}

/// One slice-product check: is `S_x^-1 T_x U_0` a coset of `S_0 T_0 U_0`
/// inside H, disjoint from it when x is a non-trivial coset?
#[derive(Debug)]
pub struct SliceCosetCheck {
    pub coset: usize,
    pub is_coset: bool,
    pub nontrivial_ok: bool,
}

/// One distinctness check between two slice-product cosets.
#[derive(Debug)]
pub struct SliceDistinctCheck {
    pub cosets: (usize, usize),
    pub distinct: bool,
}

/// Slice-product laws for a subgroup triple over an abelian normal H.
#[derive(Debug)]
pub struct SliceLawReport {
    /// `|S_0 T_0 U_0|`, the size of the base product subgroup.
    pub base_order: usize,
    pub part1: Vec<SliceCosetCheck>,
    /// Pairwise distinctness is only claimed when `U_0` is normal in G.
    pub part2_applicable: bool,
    pub part2: Vec<SliceDistinctCheck>,
    pub part3: Vec<SliceDistinctCheck>,
    pub all_passed: bool,
}

/// Materializes the slice products `S_x^-1 T_x U_0` and checks the three
/// structural laws they obey: each is a coset of `S_0 T_0 U_0` in H
/// (non-trivial off the identity coset); for distinct cosets they are
/// pairwise distinct when `U_0` is normal in G; and they stay distinct from
/// the transposed family `S_y^-1 U_y T_0`.
pub fn lemma_coset_checks(
    g: &GroupTable,
    tr: &TppTriple,
    h: &SubgroupRecord,
) -> Result<SliceLawReport> {
    if !h.is_normal {
        return Err(Error::NotNormal);
    }
    if !h.is_abelian {
        return Err(Error::NotAbelian);
    }
    require_subgroup_triple(g, tr)?;
    let dec = CosetDecomposition::new(g, h, tr)?;
    let [s0, t0, u0] = dec.restriction;
    let base = g.set_product(&g.set_product(&s0, &t0), &u0);

    let slice_product = |x: usize, first: usize, second: usize, tail: &ElementSet| {
        // inverse(first slice at x) * (second slice at x) * tail
        let inv = g.set_inverse(&dec.slices[x][first]);
        g.set_product(&g.set_product(&inv, &dec.slices[x][second]), tail)
    };

    let st_common: Vec<usize> = dec.supports[0].intersection(&dec.supports[1]).to_vec();
    let su_common: Vec<usize> = dec.supports[0].intersection(&dec.supports[2]).to_vec();

    let mut all_passed = true;
    let mut part1 = Vec::new();
    for &x in &st_common {
        let w = slice_product(x, 0, 1, &u0);
        let in_h = w.is_subset_of(&h.elements);
        let sized = w.len() == base.len();
        let is_coset = in_h && sized && {
            let rep = w.min_element().expect("slice products are non-empty");
            g.left_mul_set(g.inv(rep), &w) == base
        };
        let nontrivial_ok = x == 0 || w.is_disjoint(&base);
        all_passed &= is_coset && nontrivial_ok;
        part1.push(SliceCosetCheck {
            coset: x,
            is_coset,
            nontrivial_ok,
        });
    }

    let u0_normal_in_g = {
        let mut normal = true;
        'outer: for x in 0..g.order() {
            for e in u0.iter() {
                if !u0.contains(g.mul(g.mul(x, e), g.inv(x))) {
                    normal = false;
                    break 'outer;
                }
            }
        }
        normal
    };
    let mut part2 = Vec::new();
    if u0_normal_in_g {
        for (i, &x) in st_common.iter().enumerate() {
            for &y in &st_common[i + 1..] {
                let wx = slice_product(x, 0, 1, &u0);
                let wy = slice_product(y, 0, 1, &u0);
                let distinct = wx != wy;
                all_passed &= distinct;
                part2.push(SliceDistinctCheck {
                    cosets: (x, y),
                    distinct,
                });
            }
        }
    }

    let mut part3 = Vec::new();
    for &x in &st_common {
        for &y in &su_common {
            if x == y {
                continue;
            }
            let wx = slice_product(x, 0, 1, &u0);
            let vy = slice_product(y, 0, 2, &t0);
            let distinct = wx != vy;
            all_passed &= distinct;
            part3.push(SliceDistinctCheck {
                cosets: (x, y),
                distinct,
            });
        }
    }

    Ok(SliceLawReport {
        base_order: base.len(),
        part1,
        part2_applicable: u0_normal_in_g,
        part2,
        part3,
        all_passed,
    })
}

/// Verification record for the prime-index bound on one qualifying (H, p).
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    pub h_order: usize,
    pub p: usize,
    /// `p^2 / (2p - 1)`.
    pub bound: Ratio<i64>,
    pub beta0: u64,
    pub rho0: Ratio<i64>,
    pub holds: bool,
    pub equality: bool,
    /// Filled in when `rho0` attains the bound exactly.
    pub equality_conditions: Option<EqualityConditions>,
}

/// The divisibility facts forced by an equality instance: `2p - 1` divides
/// `|H|`, and `|G| = p(2p-1)m` with `m` a proper divisor of `|H|`.
#[derive(Clone, Debug)]
pub struct EqualityConditions {
    pub two_p_minus_1_divides_h: bool,
    pub m: Option<u64>,
    pub m_divides_h: bool,
    pub m_less_than_h: bool,
}

impl EqualityConditions {
    pub fn all_hold(&self) -> bool {
        self.two_p_minus_1_divides_h && self.m.is_some() && self.m_divides_h && self.m_less_than_h
    }
}

fn require_exhausted(report: &SearchReport, mode: SearchMode) -> Result<()> {
    if report.mode != mode || !report.exhausted {
        return Err(Error::SearchNotExhausted);
    }
    Ok(())
}

/// Checks `rho0 <= p^2/(2p-1)` for every abelian normal subgroup of prime
/// index, from an exhausted subgroup-capacity report.
///
/// Empty result means the bound's hypothesis does not apply to this group.
/// `holds` must come back true in every report; a false value is either an
/// implementation bug or a genuine counterexample to a proven statement,
/// and callers are expected to abort loudly on it.
pub fn verify_theorem(
    g: &GroupTable,
    subgroups: &[SubgroupRecord],
    beta0_report: &SearchReport,
) -> Result<Vec<TheoremReport>> {
    require_exhausted(beta0_report, SearchMode::SubgroupCapacity)?;
    let qualifying = find_abelian_normal_prime_index(g, subgroups);
    let mut out = Vec::new();
    for (h, p) in qualifying {
        let bound = Ratio::new((p * p) as i64, (2 * p - 1) as i64);
        let rho0 = beta0_report.ratio;
        let holds = rho0 <= bound;
        let equality = rho0 == bound;
        let equality_conditions = equality.then(|| {
            let two_p_minus_1 = 2 * p as u64 - 1;
            let divides = (h.order as u64).is_multiple_of(two_p_minus_1);
            let denom = p as u64 * two_p_minus_1;
            let m = (g.order() as u64).is_multiple_of(denom).then(|| g.order() as u64 / denom);
            EqualityConditions {
                two_p_minus_1_divides_h: divides,
                m,
                m_divides_h: m.is_some_and(|m| (h.order as u64).is_multiple_of(m)),
                m_less_than_h: m.is_some_and(|m| m < h.order as u64),
            }
        });
        out.push(TheoremReport {
            group: g.display_name(),
            order: g.order(),
            h_order: h.order,
            p,
            bound,
            beta0: beta0_report.capacity,
            rho0,
            holds,
            equality,
            equality_conditions,
        });
    }
    Ok(out)
}

/// Special cases of the prime-index bound.
#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub group: String,
    /// Per qualifying (H, p) with `2p - 1` not dividing `|G|`:
    /// `rho0 <= p/2`.
    pub coprime_cases: Vec<CoprimeCase>,
    /// When G is a p-group with an abelian subgroup of index p: `rho0 = 1`.
    pub p_group_case: Option<PGroupCase>,
    pub all_hold: bool,
}

#[derive(Clone, Debug)]
pub struct CoprimeCase {
    pub p: usize,
    pub h_order: usize,
    pub bound: Ratio<i64>,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct PGroupCase {
    pub p: usize,
    pub rho0_is_one: bool,
}

fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2 has a divisor");
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Checks the two corollary branches from an exhausted subgroup-capacity
/// report.
pub fn verify_corollary(
    g: &GroupTable,
    subgroups: &[SubgroupRecord],
    beta0_report: &SearchReport,
) -> Result<CorollaryReport> {
    require_exhausted(beta0_report, SearchMode::SubgroupCapacity)?;
    let qualifying = find_abelian_normal_prime_index(g, subgroups);
    let rho0 = beta0_report.ratio;
    let mut all_hold = true;

    let mut coprime_cases = Vec::new();
    for (h, p) in &qualifying {
        if !g.order().is_multiple_of(2 * p - 1) {
            let bound = Ratio::new(*p as i64, 2);
            let holds = rho0 <= bound;
            all_hold &= holds;
            coprime_cases.push(CoprimeCase {
                p: *p,
                h_order: h.order,
                bound,
                holds,
            });
        }
    }

    // Maximal subgroups of p-groups are normal, so an abelian subgroup of
    // index p in a p-group always appears among the qualifying pairs.
    let p_group_case = prime_power_base(g.order()).and_then(|p| {
        qualifying
            .iter()
            .any(|(h, q)| *q == p && h.is_abelian)
            .then(|| {
                let rho0_is_one = rho0 == Ratio::from_integer(1);
                all_hold &= rho0_is_one;
                PGroupCase { p, rho0_is_one }
            })
    });

    Ok(CorollaryReport {
        group: g.display_name(),
        coprime_cases,
        p_group_case,
        all_hold,
    })
}

/// Status of the cyclic-normal-prime-index conjecture for one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureStatus {
    Holds,
    /// A counterexample: a finding to report prominently, not an error.
    Violated,
    /// The capacity search did not exhaust; no evidence either way.
    Inconclusive,
}

impl std::fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConjectureStatus::Holds => write!(f, "holds"),
            ConjectureStatus::Violated => write!(f, "VIOLATED"),
            ConjectureStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Scan record for one group with a cyclic normal subgroup of prime index.
#[derive(Clone, Debug)]
pub struct ConjectureRecord {
    pub group: String,
    pub order: usize,
    /// Smallest qualifying prime index (the tightest bound).
    pub p: usize,
    pub h_order: usize,
    pub bound: Ratio<i64>,
    pub rho: Option<Ratio<i64>>,
    pub status: ConjectureStatus,
}

/// Builds the conjecture record for one group, or `None` when no cyclic
/// normal subgroup of prime index exists (the hypothesis fails).
///
/// `beta_report` should be a full-capacity report for the same group;
/// truncated or missing reports yield an inconclusive record.
pub fn conjecture_record(
    g: &GroupTable,
    subgroups: &[SubgroupRecord],
    beta_report: Option<&SearchReport>,
) -> Option<ConjectureRecord> {
    let qualifying = find_cyclic_normal_prime_index(g, subgroups);
    let (h, p) = qualifying.into_iter().min_by_key(|(_, p)| *p)?;
    debug_assert!(is_prime(p));
    let bound = Ratio::new((p * p) as i64, (2 * p - 1) as i64);
    let (rho, status) = match beta_report {
        Some(rep) if rep.mode == SearchMode::FullCapacity && rep.exhausted => {
            let rho = rep.ratio;
            let status = if rho <= bound {
                ConjectureStatus::Holds
            } else {
                ConjectureStatus::Violated
            };
            (Some(rho), status)
        }
        Some(rep) if rep.mode == SearchMode::FullCapacity => {
            (Some(rep.ratio), ConjectureStatus::Inconclusive)
        }
        _ => (None, ConjectureStatus::Inconclusive),
    };
    Some(ConjectureRecord {
        group: g.display_name(),
        order: g.order(),
        p,
        h_order: h.order,
        bound,
        rho,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::search::{capacity, subgroup_capacity, SearchConfig};
    use crate::subgroups::enumerate_subgroups;

    fn build(spec: GroupSpec) -> GroupTable {
        GroupTable::build(&spec).unwrap()
    }

    #[test]
    fn support_examples() {
        // dihedral(4): H = rotations, S = {e, s} meets both cosets.
        let g = build(GroupSpec::Dihedral(4));
        let subs = enumerate_subgroups(&g).unwrap();
        let h = subs
            .iter()
            .find(|s| s.order == 4 && s.elements.contains(1))
            .unwrap();
        let s = ElementSet::from_indices(8, &[0, 4]);
        let sup = h_support(&g, &s, h).unwrap();
        assert_eq!(sup.to_vec(), vec![0, 1]);

        // A set inside H is supported on the identity coset only.
        let inside = ElementSet::from_indices(8, &[0, 2]);
        assert_eq!(h_support(&g, &inside, h).unwrap().to_vec(), vec![0]);

        // The whole group is supported everywhere.
        let all = ElementSet::full(8);
        assert_eq!(h_support(&g, &all, h).unwrap().len(), 2);
    }

    #[test]
    fn support_index_identity_across_pairs() {
        for spec in [
            GroupSpec::Dihedral(4),
            GroupSpec::Dihedral(6),
            GroupSpec::Semidirect { n: 7, m: 3, k: 2 },
            GroupSpec::Cyclic(12),
        ] {
            let g = build(spec);
            let subs = enumerate_subgroups(&g).unwrap();
            for s in &subs {
                for h in &subs {
                    assert!(support_index_identity(&g, s, h).unwrap());
                }
            }
        }
    }

    #[test]
    fn support_subgroup_examples() {
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let h = subs
            .iter()
            .find(|s| s.order == 6 && s.elements.contains(1))
            .unwrap();
        for s in &subs {
            assert!(support_subgroup_check(&g, s, h).unwrap());
        }
        // The reflection subgroup maps onto the whole order-2 quotient.
        let refl = subs
            .iter()
            .find(|s| s.order == 2 && s.elements.contains(6))
            .unwrap();
        assert_eq!(h_support(&g, &refl.elements, h).unwrap().len(), 2);

        // Sylow-3 in the order-21 group covers the whole order-3 quotient.
        let f21 = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&f21).unwrap();
        let c7 = subs.iter().find(|s| s.order == 7).unwrap();
        let sylow3 = subs.iter().find(|s| s.order == 3).unwrap();
        assert!(support_subgroup_check(&f21, sylow3, c7).unwrap());
        assert_eq!(h_support(&f21, &sylow3.elements, c7).unwrap().len(), 3);

        // Non-normal H is rejected.
        let d6 = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&d6).unwrap();
        let bad_h = subs.iter().find(|s| !s.is_normal).unwrap();
        let any = subs.iter().find(|s| s.order == 2).unwrap();
        assert!(matches!(
            support_subgroup_check(&d6, any, bad_h),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn coset_bound_trivial_triple() {
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let h = subs.iter().find(|s| s.order == 6 && s.is_abelian).unwrap();
        let tr = TppTriple::from_indices(
            &g,
            &(0..12).collect::<Vec<_>>(),
            &[0],
            &[0],
        )
        .unwrap();
        let rep = abelian_coset_bound(&g, &tr, h).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.support_sizes, [2, 1, 1]);
        assert_eq!(rep.lhs, 12);
        assert_eq!(rep.rhs, Ratio::from_integer(12));
    }

    #[test]
    fn coset_bound_on_the_order_21_group() {
        let g = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&g).unwrap();
        let c7 = subs.iter().find(|s| s.order == 7).unwrap();
        let c3 = subs.iter().find(|s| s.order == 3).unwrap();
        let trivial = subs.iter().find(|s| s.order == 1).unwrap();
        let tr = TppTriple::new(c7.elements, c3.elements, trivial.elements).unwrap();
        let rep = abelian_coset_bound(&g, &tr, c7).unwrap();
        assert_eq!(rep.support_sizes, [1, 3, 1]);
        assert_eq!(rep.lhs, 21);
        assert_eq!(rep.rhs, Ratio::from_integer(21));
        assert!(rep.ok && rep.divisors_ok);
    }

    #[test]
    fn coset_bound_on_search_witnesses() {
        for spec in [GroupSpec::Dihedral(6), GroupSpec::Dihedral(8)] {
            let g = build(spec);
            let subs = enumerate_subgroups(&g).unwrap();
            let rep = subgroup_capacity(&g).unwrap();
            let witness = rep.witnesses[0];
            for (h, _) in find_abelian_normal_prime_index(&g, &subs) {
                let check = abelian_coset_bound(&g, &witness, &h).unwrap();
                assert!(check.ok && check.divisors_ok);
            }
        }
    }

    #[test]
    fn coset_bound_rejects_bad_inputs() {
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let h = subs.iter().find(|s| s.order == 6 && s.is_abelian).unwrap();
        let nonnormal = subs.iter().find(|s| !s.is_normal).unwrap();
        let s3 = subs.iter().find(|s| s.order == 6 && !s.is_abelian).unwrap();
        let trivial_tr = TppTriple::from_indices(
            &g,
            &(0..12).collect::<Vec<_>>(),
            &[0],
            &[0],
        )
        .unwrap();
        assert!(matches!(
            abelian_coset_bound(&g, &trivial_tr, nonnormal),
            Err(Error::NotNormal)
        ));
        assert!(matches!(
            abelian_coset_bound(&g, &trivial_tr, s3),
            Err(Error::NotAbelian)
        ));
        // Non-subgroup sets are rejected.
        let bad = TppTriple::from_indices(&g, &[0, 1], &[0], &[0]).unwrap();
        assert!(matches!(
            abelian_coset_bound(&g, &bad, h),
            Err(Error::NotASubgroup(_))
        ));
        // Subgroup sets that fail the TPP are rejected.
        let a3 = subs.iter().find(|s| s.order == 3).unwrap();
        let not_tpp = TppTriple::new(a3.elements, a3.elements, a3.elements).unwrap();
        assert!(matches!(
            abelian_coset_bound(&g, &not_tpp, h),
            Err(Error::NotATppTriple)
        ));
    }

    #[test]
    fn slice_laws_vacuous_inside_h() {
        // A triple fully inside H has all supports on the identity coset.
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let h = subs.iter().find(|s| s.order == 6 && s.is_abelian).unwrap();
        let c3 = subs
            .iter()
            .find(|s| s.order == 3 && s.elements.is_subset_of(&h.elements))
            .unwrap();
        let trivial = subs.iter().find(|s| s.order == 1).unwrap();
        let tr = TppTriple::new(c3.elements, trivial.elements, trivial.elements).unwrap();
        let rep = lemma_coset_checks(&g, &tr, h).unwrap();
        assert!(rep.all_passed);
        assert_eq!(rep.part1.len(), 1); // only the identity coset
        assert!(rep.part2.is_empty() || rep.part2.iter().all(|c| c.distinct));
        assert!(rep.part3.is_empty());
    }

    #[test]
    fn slice_laws_on_order_21_sylow_triple() {
        // A subgroup triple of three Sylow-3s is supported on every coset of
        // the order-7 subgroup; the two non-identity cosets produce
        // non-trivial slice products.
        let g = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let rep0 = subgroup_capacity(&g).unwrap();
        assert_eq!(rep0.capacity, 27);
        let witness = rep0.witnesses[0];
        let subs = enumerate_subgroups(&g).unwrap();
        let c7 = subs.iter().find(|s| s.order == 7).unwrap();
        let dec = CosetDecomposition::new(&g, c7, &witness).unwrap();
        assert_eq!(dec.support_sizes, [3, 3, 3]);
        let rep = lemma_coset_checks(&g, &witness, c7).unwrap();
        assert!(rep.all_passed);
        assert_eq!(rep.part1.len(), 3);
        assert!(rep
            .part1
            .iter()
            .filter(|c| c.coset != 0)
            .all(|c| c.is_coset && c.nontrivial_ok));
    }

    #[test]
    fn slice_laws_on_dihedral_witness() {
        let g = build(GroupSpec::Dihedral(6));
        let rep0 = subgroup_capacity(&g).unwrap();
        let subs = enumerate_subgroups(&g).unwrap();
        let h = subs.iter().find(|s| s.order == 6 && s.is_abelian).unwrap();
        let rep = lemma_coset_checks(&g, &rep0.witnesses[0], h).unwrap();
        assert!(rep.all_passed);
    }

    #[test]
    fn theorem_examples() {
        // Order 21: p = 3, bound 9/5, rho0 = 9/7: holds, no equality.
        let g = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&g).unwrap();
        let b0 = subgroup_capacity(&g).unwrap();
        let reports = verify_theorem(&g, &subs, &b0).unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert_eq!(r.p, 3);
        assert_eq!(r.bound, Ratio::new(9, 5));
        assert_eq!(r.rho0, Ratio::new(9, 7));
        assert!(r.holds && !r.equality);

        // dihedral(6): p = 2, bound 4/3 attained exactly; the equality
        // conditions must then hold: 3 | 6 and 12 = 2*3*2 with 2 | 6, 2 < 6.
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let b0 = subgroup_capacity(&g).unwrap();
        let reports = verify_theorem(&g, &subs, &b0).unwrap();
        let r = reports.iter().find(|r| r.h_order == 6).unwrap();
        assert!(r.holds && r.equality);
        let eq = r.equality_conditions.as_ref().unwrap();
        assert!(eq.all_hold());
        assert_eq!(eq.m, Some(2));

        // dihedral(4): 2-group, rho0 = 1.
        let g = build(GroupSpec::Dihedral(4));
        let subs = enumerate_subgroups(&g).unwrap();
        let b0 = subgroup_capacity(&g).unwrap();
        assert_eq!(b0.capacity, 8);
        let reports = verify_theorem(&g, &subs, &b0).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.holds));
    }

    #[test]
    fn theorem_requires_exhausted_beta0() {
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let beta = capacity(&g, &SearchConfig::default()).unwrap();
        // Wrong mode.
        assert!(matches!(
            verify_theorem(&g, &subs, &beta),
            Err(Error::SearchNotExhausted)
        ));
    }

    #[test]
    fn corollary_examples() {
        // Order 21: 5 does not divide 21, so rho0 <= 3/2; actual is 9/7.
        let g = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&g).unwrap();
        let b0 = subgroup_capacity(&g).unwrap();
        let rep = verify_corollary(&g, &subs, &b0).unwrap();
        assert!(rep.all_hold);
        assert_eq!(rep.coprime_cases.len(), 1);
        assert_eq!(rep.coprime_cases[0].bound, Ratio::new(3, 2));
        assert!(rep.p_group_case.is_none());

        // dihedral(5), order 10: 3 does not divide 10 and p = 2, so
        // rho0 <= 1, i.e. exactly 1.
        let g = build(GroupSpec::Dihedral(5));
        let subs = enumerate_subgroups(&g).unwrap();
        let b0 = subgroup_capacity(&g).unwrap();
        assert_eq!(b0.capacity, 10);
        let rep = verify_corollary(&g, &subs, &b0).unwrap();
        assert!(rep.all_hold);
        assert!(!rep.coprime_cases.is_empty());

        // 2-groups with an abelian index-2 subgroup: rho0 = 1.
        for spec in [GroupSpec::Dihedral(4), GroupSpec::Dihedral(8)] {
            let g = build(spec);
            let subs = enumerate_subgroups(&g).unwrap();
            let b0 = subgroup_capacity(&g).unwrap();
            let rep = verify_corollary(&g, &subs, &b0).unwrap();
            let pg = rep.p_group_case.expect("these are 2-groups");
            assert!(pg.rho0_is_one);
            assert!(rep.all_hold);
        }
    }

    #[test]
    fn conjecture_records() {
        // dihedral(6): cyclic normal C6 of index 2, rho = 4/3 = bound.
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let beta = capacity(&g, &SearchConfig::default()).unwrap();
        let rec = conjecture_record(&g, &subs, Some(&beta)).unwrap();
        assert_eq!(rec.p, 2);
        assert_eq!(rec.bound, Ratio::new(4, 3));
        assert_eq!(rec.rho, Some(Ratio::new(4, 3)));
        assert_eq!(rec.status, ConjectureStatus::Holds);

        // Order 21: rho = 9/7 <= 9/5.
        let g = build(GroupSpec::Semidirect { n: 7, m: 3, k: 2 });
        let subs = enumerate_subgroups(&g).unwrap();
        let beta = capacity(&g, &SearchConfig::default()).unwrap();
        let rec = conjecture_record(&g, &subs, Some(&beta)).unwrap();
        assert_eq!(rec.p, 3);
        assert_eq!(rec.status, ConjectureStatus::Holds);

        // Truncated search is inconclusive, never evidence.
        let beta_trunc = capacity(
            &g,
            &SearchConfig {
                node_budget: Some(3),
                ..SearchConfig::default()
            },
        )
        .unwrap();
        let rec = conjecture_record(&g, &subs, Some(&beta_trunc)).unwrap();
        assert_eq!(rec.status, ConjectureStatus::Inconclusive);

        // The order-32 wreath-type group has abelian but no cyclic index-2
        // subgroups, so the hypothesis fails and no record is produced.
        let g = crate::tables::g32_11();
        let subs = enumerate_subgroups(&g).unwrap();
        assert!(conjecture_record(&g, &subs, None).is_none());
    }

    #[test]
    fn decomposition_partitions() {
        let g = build(GroupSpec::Dihedral(6));
        let subs = enumerate_subgroups(&g).unwrap();
        let rep0 = subgroup_capacity(&g).unwrap();
        let witness = rep0.witnesses[0];
        for h in &subs {
            let dec = CosetDecomposition::new(&g, h, &witness).unwrap();
            for (slot, set) in witness.sets().iter().enumerate() {
                let total: usize = dec.slices.iter().map(|s| s[slot].len()).sum();
                assert_eq!(total, set.len());
                for (x, slice) in dec.slices.iter().enumerate() {
                    assert_eq!(dec.supports[slot].contains(x), !slice[slot].is_empty());
                }
            }
            assert_eq!(dec.n_index, h.index);
        }
    }
}
