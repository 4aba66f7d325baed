//! Exact TPP capacity search.
//!
//! Two capacities are computed: the subgroup capacity (maximum triple size
//! over subgroup triples) and the full capacity (over all subset triples).
//! The full search is type-first branch and bound: candidate parameter types
//! `(a, b, c)` with `a >= b >= c` are enumerated in decreasing size order,
//! each filtered by the pair bound and by the running incumbent, and a
//! depth-first search over element sets decides whether a triple of that
//! type exists.
//!
//! Search-space reductions, all loss-free:
//! - only basic triples are considered (identity forced into each set), by
//!   translation invariance;
//! - only types with `a >= b >= c`, by permutation invariance;
//! - within each set, elements are added in strictly increasing index order;
//! - growing S keeps `|Q(S)| <= n - b + 1`, growing T keeps
//!   `|Q(S)| + |Q(T)| - 1 <= n` and `|Q(T)| <= n - c + 1` (the quotient sets
//!   of a valid triple overlap only at the identity, and `|Q(X)| >= |X|`);
//! - T extensions keep `Q(S) meet Q(T) = {1}`; U extensions keep `Q(U)`
//!   clear of a precomputed forbidden set encoding both TPP conditions.
//!
//! Completed triples are re-verified with the full quotient criterion before
//! being reported.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroups::{enumerate_subgroups, find_abelian_normal_prime_index, SubgroupRecord};
use crate::tpp::{
    is_tpp_definitional, is_tpp_quotient, neumann_capacity_bound, neumann_pair_bound_ok,
    subgroup_tpp_sets_unchecked, TppTriple, ALL_PERMS,
};
use crate::util::full_search_cap;

/// What a search run computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Maximum size over subgroup triples.
    SubgroupCapacity,
    /// Maximum size over all subset triples.
    FullCapacity,
    /// Existence of a triple of exactly this parameter type.
    FixedType(usize, usize, usize),
}

impl std::fmt::Display for SearchMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchMode::SubgroupCapacity => write!(f, "beta0"),
            SearchMode::FullCapacity => write!(f, "beta"),
            SearchMode::FixedType(a, b, c) => write!(f, "type={a},{b},{c}"),
        }
    }
}

/// Budgets and parallelism knobs. Budgets bound the full search; when one
/// binds, the report comes back with `exhausted = false` rather than an
/// error.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub thread_count: usize,
    pub report_all_witness_types: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            thread_count: 1,
            report_all_witness_types: false,
        }
    }
}

/// Result of a capacity or fixed-type search.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub group: String,
    pub order: usize,
    pub mode: SearchMode,
    /// The capacity (or found-triple size in fixed-type mode; 0 when no
    /// triple of the requested type exists).
    pub capacity: u64,
    /// `capacity / |G|` as an exact fraction.
    pub ratio: Ratio<i64>,
    pub witnesses: Vec<TppTriple>,
    pub neumann_bound: u64,
    /// `min p^2/(2p-1) * |G|` over abelian normal subgroups of prime index
    /// `p`, when any exist. A proven bound for the subgroup capacity only.
    pub theorem_bound: Option<Ratio<i64>>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// True when the search provably covered the whole space.
    pub exhausted: bool,
}

impl SearchReport {
    pub fn ratio_f64(&self) -> f64 {
        *self.ratio.numer() as f64 / *self.ratio.denom() as f64
    }
}

fn theorem_bound_for(g: &GroupTable, subs: &[SubgroupRecord]) -> Option<Ratio<i64>> {
    find_abelian_normal_prime_index(g, subs)
        .iter()
        .map(|(_, p)| {
            Ratio::new((p * p) as i64, (2 * p - 1) as i64) * Ratio::from_integer(g.order() as i64)
        })
        .min()
}

fn theorem_bound_if_cheap(g: &GroupTable) -> Option<Ratio<i64>> {
    if g.order() > 64 {
        return None;
    }
    let subs = enumerate_subgroups(g).ok()?;
    theorem_bound_for(g, &subs)
}

fn trivial_triple(g: &GroupTable) -> TppTriple {
    let n = g.order();
    TppTriple::new(
        ElementSet::full(n),
        ElementSet::identity_only(n),
        ElementSet::identity_only(n),
    )
    .expect("trivial triple is well-formed")
}

/// Asserts the soundness contract on anything the search hands back.
fn check_witness(g: &GroupTable, tr: &TppTriple) {
    assert!(
        is_tpp_quotient(g, tr) && is_tpp_definitional(g, tr),
        "search produced a non-TPP witness; this is a bug"
    );
}

// ---------------------------------------------------------------------------
// Subgroup capacity
// ---------------------------------------------------------------------------

/// Exact subgroup TPP capacity: the maximum of `|S||T||U|` over subgroup
/// triples satisfying the TPP. Always exhaustive; the subgroup lattice is
/// enumerated in full.
pub fn subgroup_capacity(g: &GroupTable) -> Result<SearchReport> {
    let started = Instant::now();
    let subs = enumerate_subgroups(g)?;
    let n = g.order() as u64;

    let mut by_order_desc: Vec<&SubgroupRecord> = subs.iter().collect();
    by_order_desc.sort_by(|a, b| {
        b.order
            .cmp(&a.order)
            .then_with(|| a.elements.canonical_key().cmp(&b.elements.canonical_key()))
    });

    let mut best = n;
    let mut witnesses = vec![trivial_triple(g)];
    let mut nodes = 0u64;

    for (ti, t) in by_order_desc.iter().enumerate() {
        // With |S| <= n the largest size this T can reach is n*|T|^2.
        if n * (t.order as u64) * (t.order as u64) < best {
            break;
        }
        for u in by_order_desc[ti..].iter() {
            if n * (t.order as u64) * (u.order as u64) < best {
                break;
            }
            if !t.elements.meets_only_at_identity(&u.elements) {
                continue;
            }
            let tu = g.set_product(&t.elements, &u.elements);
            for s in by_order_desc.iter() {
                if s.order < t.order {
                    break;
                }
                let size = (s.order * t.order * u.order) as u64;
                if size < best {
                    continue;
                }
                nodes += 1;
                if s.elements.meets_only_at_identity(&tu) {
                    debug_assert!(subgroup_tpp_sets_unchecked(
                        g,
                        &s.elements,
                        &t.elements,
                        &u.elements
                    ));
                    let tr = TppTriple::new(s.elements, t.elements, u.elements)
                        .expect("subgroups are non-empty");
                    if size > best {
                        best = size;
                        witnesses = vec![tr];
                    } else if witnesses.iter().all(|w| w.params() != tr.params()) {
                        witnesses.push(tr);
                    }
                }
            }
        }
    }

    for w in &witnesses {
        check_witness(g, w);
    }
    Ok(SearchReport {
        group: g.display_name(),
        order: g.order(),
        mode: SearchMode::SubgroupCapacity,
        capacity: best,
        ratio: Ratio::new(best as i64, g.order() as i64),
        witnesses,
        neumann_bound: neumann_capacity_bound(n),
        theorem_bound: theorem_bound_for(g, &subs),
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        exhausted: true,
    })
}

// ---------------------------------------------------------------------------
// Full capacity: type-first branch and bound over subsets
// ---------------------------------------------------------------------------

/// Candidate types `(a, b, c)`, `a >= b >= c`, pair-bound feasible, with
/// size strictly above `floor`, in decreasing size order (ties broken
/// lexicographically, largest first).
fn candidate_types(n: u64, floor: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for c in 1..=n {
        if c * (2 * c - 1) > n {
            break;
        }
        for b in c..=n {
            if b * (b + c - 1) > n {
                break;
            }
            for a in b..=n {
                // With a >= b >= c the binding pair constraint is a(b+c-1).
                if a * (b + c - 1) > n {
                    break;
                }
                if a * b * c > floor {
                    out.push((a, b, c));
                }
            }
        }
    }
    out.sort_by(|x, y| {
        let (sx, sy) = (x.0 * x.1 * x.2, y.0 * y.1 * y.2);
        sy.cmp(&sx).then(y.cmp(x))
    });
    out
}

struct Budget {
    nodes: AtomicU64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    truncated: AtomicBool,
}

impl Budget {
    fn new(cfg: &SearchConfig) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            limit: cfg.node_budget,
            deadline: cfg.time_budget.map(|d| Instant::now() + d),
            truncated: AtomicBool::new(false),
        }
    }

    /// Counts one node; false means stop (budget hit).
    #[inline]
    fn tick(&self) -> bool {
        let c = self.nodes.fetch_add(1, Ordering::Relaxed);
        if let Some(limit) = self.limit {
            if c >= limit {
                self.truncated.store(true, Ordering::Relaxed);
                return false;
            }
        }
        if let Some(deadline) = self.deadline {
            if c & 1023 == 0 && Instant::now() >= deadline {
                self.truncated.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    fn truncated(&self) -> bool {
        self.truncated.load(Ordering::Relaxed)
    }
}

/// One fixed-type existence search over basic triples.
struct TypeSearch<'a> {
    g: &'a GroupTable,
    n: usize,
    size_t: usize,
    size_u: usize,
    budget: &'a Budget,
    stop: AtomicBool,
    found: Mutex<Option<TppTriple>>,
}

impl TypeSearch<'_> {
    #[inline]
    fn should_stop(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn record(&self, tr: TppTriple) {
        let mut slot = self.found.lock().unwrap();
        if slot.is_none() {
            *slot = Some(tr);
        }
        self.stop.store(true, Ordering::Relaxed);
    }

    /// Extends S (which already contains the identity and `last`).
    fn grow_s(&self, s: ElementSet, qs: ElementSet, last: usize, remaining: usize) {
        if self.should_stop() {
            return;
        }
        if remaining == 0 {
            let t0 = ElementSet::identity_only(self.n);
            self.grow_t(&s, &qs, t0, t0, 0, self.size_t - 1);
            return;
        }
        for next in last + 1..=self.n - remaining {
            if !self.budget.tick() {
                self.stop.store(true, Ordering::Relaxed);
                return;
            }
            if self.should_stop() {
                return;
            }
            let (s2, qs2) = extend_with_quotients(self.g, &s, &qs, next);
            // A completed triple satisfies |Q(S)| + |Q(T)| - 1 <= n.
            if qs2.len() > self.n + 1 - self.size_t {
                continue;
            }
            self.grow_s(s2, qs2, next, remaining - 1);
        }
    }

    fn grow_t(
        &self,
        s: &ElementSet,
        qs: &ElementSet,
        t: ElementSet,
        qt: ElementSet,
        last: usize,
        remaining: usize,
    ) {
        if self.should_stop() {
            return;
        }
        if remaining == 0 {
            let bad_u = self.forbidden_for_u(qs, &qt);
            let u0 = ElementSet::identity_only(self.n);
            self.grow_u(s, &t, &bad_u, u0, 0, self.size_u - 1);
            return;
        }
        for next in last + 1..=self.n - remaining {
            if !self.budget.tick() {
                self.stop.store(true, Ordering::Relaxed);
                return;
            }
            if self.should_stop() {
                return;
            }
            // Every new quotient next*y^-1, y*next^-1 must stay off
            // Q(S)\{1}; the products cannot be the identity for distinct
            // elements, so a direct membership test suffices.
            let ok = t.iter().all(|y| {
                !qs.contains(self.g.mul(next, self.g.inv(y)))
                    && !qs.contains(self.g.mul(y, self.g.inv(next)))
            });
            if !ok {
                continue;
            }
            let (t2, qt2) = extend_with_quotients(self.g, &t, &qt, next);
            if qs.len() + qt2.len() > self.n + 1 {
                continue;
            }
            if qt2.len() > self.n + 1 - self.size_u {
                continue;
            }
            self.grow_t(s, qs, t2, qt2, next, remaining - 1);
        }
    }

    /// Elements that may never appear in Q(U): anything in Q(T)\{1} (first
    /// TPP condition) and any q with Q(T)q meeting Q(S)\{1} (second).
    fn forbidden_for_u(&self, qs: &ElementSet, qt: &ElementSet) -> ElementSet {
        let mut bad = ElementSet::empty(self.n);
        for q in 0..self.n {
            if q != 0 && qt.contains(q) {
                bad.insert(q);
                continue;
            }
            for z in qt.iter() {
                let w = self.g.mul(z, q);
                if w != 0 && qs.contains(w) {
                    bad.insert(q);
                    break;
                }
            }
        }
        debug_assert!(!bad.contains(0));
        bad
    }

    fn grow_u(
        &self,
        s: &ElementSet,
        t: &ElementSet,
        bad_u: &ElementSet,
        u: ElementSet,
        last: usize,
        remaining: usize,
    ) {
        if self.should_stop() {
            return;
        }
        if remaining == 0 {
            let tr = TppTriple::new(*s, *t, u).expect("sets contain the identity");
            if is_tpp_quotient(self.g, &tr) {
                self.record(tr);
            } else {
                debug_assert!(false, "incremental pruning accepted a non-TPP triple");
            }
            return;
        }
        for next in last + 1..=self.n - remaining {
            if !self.budget.tick() {
                self.stop.store(true, Ordering::Relaxed);
                return;
            }
            if self.should_stop() {
                return;
            }
            let ok = u.iter().all(|y| {
                !bad_u.contains(self.g.mul(next, self.g.inv(y)))
                    && !bad_u.contains(self.g.mul(y, self.g.inv(next)))
            });
            if !ok {
                continue;
            }
            let mut u2 = u;
            u2.insert(next);
            self.grow_u(s, t, bad_u, u2, next, remaining - 1);
        }
    }
}

/// Adds `next` to `set` and folds the new quotients `next*y^-1`, `y*next^-1`
/// into `q`.
fn extend_with_quotients(
    g: &GroupTable,
    set: &ElementSet,
    q: &ElementSet,
    next: usize,
) -> (ElementSet, ElementSet) {
    let mut q2 = *q;
    for y in set.iter() {
        q2.insert(g.mul(next, g.inv(y)));
        q2.insert(g.mul(y, g.inv(next)));
    }
    let mut set2 = *set;
    set2.insert(next);
    (set2, q2)
}

/// Looks for one basic TPP triple with parameters exactly `(a, b, c)`
/// (already sorted descending). Returns the witness if one exists.
fn exists_triple_sorted(
    g: &GroupTable,
    (a, b, c): (usize, usize, usize),
    budget: &Budget,
    thread_count: usize,
) -> Option<TppTriple> {
    debug_assert!(a >= b && b >= c && c >= 1);
    let n = g.order();
    let search = TypeSearch {
        g,
        n,
        size_t: b,
        size_u: c,
        budget,
        stop: AtomicBool::new(false),
        found: Mutex::new(None),
    };
    let identity = ElementSet::identity_only(n);

    if a == 1 {
        // S = T = U = {1}.
        search.grow_s(identity, identity, 0, 0);
    } else {
        // The DFS forest splits by the first non-identity element of S.
        let roots: Vec<usize> = (1..=n.saturating_sub(a - 1)).collect();
        let run_root = |s1: usize| {
            if search.should_stop() {
                return;
            }
            if !search.budget.tick() {
                search.stop.store(true, Ordering::Relaxed);
                return;
            }
            let (s, qs) = extend_with_quotients(g, &identity, &identity, s1);
            if qs.len() <= n + 1 - b {
                search.grow_s(s, qs, s1, a - 2);
            }
        };
        if thread_count <= 1 {
            for s1 in roots {
                run_root(s1);
            }
        } else {
            let next_root = AtomicUsize::new(0);
            std::thread::scope(|scope| {
                for _ in 0..thread_count {
                    scope.spawn(|| loop {
                        let i = next_root.fetch_add(1, Ordering::Relaxed);
                        if i >= roots.len() || search.should_stop() {
                            return;
                        }
                        run_root(roots[i]);
                    });
                }
            });
        }
    }

    let found = search.found.lock().unwrap().take();
    if let Some(w) = &found {
        check_witness(g, w);
    }
    found
}

/// Exact full TPP capacity over all subset triples.
///
/// When a budget binds the report carries the best size found so far with
/// `exhausted = false`. The search space is restricted to basic triples with
/// sorted parameters; see the module docs for why that loses nothing.
pub fn capacity(g: &GroupTable, cfg: &SearchConfig) -> Result<SearchReport> {
    let cap = full_search_cap();
    if g.order() > cap {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap,
        });
    }
    let started = Instant::now();
    let n = g.order() as u64;
    let budget = Budget::new(cfg);

    let mut best = n;
    let mut witnesses = vec![trivial_triple(g)];
    let mut exhausted = true;

    let floor = if cfg.report_all_witness_types { n - 1 } else { n };
    for (a, b, c) in candidate_types(n, floor) {
        let size = a * b * c;
        if size < best {
            break;
        }
        if size == best && !cfg.report_all_witness_types {
            continue;
        }
        let found = exists_triple_sorted(
            g,
            (a as usize, b as usize, c as usize),
            &budget,
            cfg.thread_count,
        );
        match found {
            Some(w) => {
                if size > best {
                    best = size;
                    witnesses = vec![w];
                } else if witnesses.iter().all(|x| x.params() != w.params()) {
                    witnesses.push(w);
                }
                if budget.truncated() {
                    // Everything larger was already proven empty, so the
                    // capacity is exact even though the budget is gone.
                    break;
                }
            }
            None => {
                if budget.truncated() {
                    exhausted = false;
                    break;
                }
            }
        }
    }

    Ok(SearchReport {
        group: g.display_name(),
        order: g.order(),
        mode: SearchMode::FullCapacity,
        capacity: best,
        ratio: Ratio::new(best as i64, g.order() as i64),
        witnesses,
        neumann_bound: neumann_capacity_bound(n),
        theorem_bound: theorem_bound_if_cheap(g),
        nodes_explored: budget.nodes.load(Ordering::Relaxed),
        elapsed: started.elapsed(),
        exhausted,
    })
}

/// Finds one TPP triple of exactly the given type, or proves none exists.
///
/// The type need not be sorted; the witness is permuted so its parameters
/// match the request slot for slot. A type that fails the pair bound is
/// rejected without search. `capacity` is the triple size when found and 0
/// otherwise.
pub fn find_triple_of_type(
    g: &GroupTable,
    ty: (usize, usize, usize),
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    let cap = full_search_cap();
    if g.order() > cap {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap,
        });
    }
    let (a, b, c) = ty;
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::InvalidTriple(
            "type parameters must be positive".into(),
        ));
    }
    let started = Instant::now();
    let n = g.order() as u64;
    let budget = Budget::new(cfg);

    let feasible = neumann_pair_bound_ok((a as u64, b as u64, c as u64), n);
    let mut witness = None;
    if feasible {
        let mut sorted = [a, b, c];
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        if let Some(w) = exists_triple_sorted(
            g,
            (sorted[0], sorted[1], sorted[2]),
            &budget,
            cfg.thread_count,
        ) {
            // Permute the sorted witness back into the requested slot order.
            let perm = ALL_PERMS
                .into_iter()
                .find(|p| crate::tpp::apply_permutation(&w, *p).params() == [a, b, c])
                .expect("some slot permutation matches the requested type");
            let w = crate::tpp::apply_permutation(&w, perm);
            check_witness(g, &w);
            witness = Some(w);
        }
    }

    let capacity = witness.as_ref().map_or(0, |w| w.size());
    let exhausted = witness.is_some() || !budget.truncated();
    Ok(SearchReport {
        group: g.display_name(),
        order: g.order(),
        mode: SearchMode::FixedType(a, b, c),
        capacity,
        ratio: Ratio::new(capacity as i64, g.order() as i64),
        witnesses: witness.into_iter().collect(),
        neumann_bound: neumann_capacity_bound(n),
        theorem_bound: theorem_bound_if_cheap(g),
        nodes_explored: budget.nodes.load(Ordering::Relaxed),
        elapsed: started.elapsed(),
        exhausted,
    })
}
