//! Finite groups as explicit multiplication tables.
//!
//! A [`GroupTable`] stores the full Cayley table of a group of order at most
//! [`crate::bits::MAX_ORDER`], with the identity fixed at index 0. Tables are
//! built from [`GroupSpec`] recipes or ingested from JSON files; ingested
//! tables are checked against all four group axioms before use.

use std::fmt;
use std::path::{Path, PathBuf};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::util::{order_cap, pow_mod};

/// A recipe for constructing a concrete group.
///
/// `Semidirect { n, m, k }` is the split extension of a cyclic group of order
/// `n` by a cyclic group of order `m`, the generator of the latter acting by
/// `x -> x^k`; it requires `k^m = 1 (mod n)` and `gcd(k, n) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Semidirect { n: usize, m: usize, k: usize },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    ExternalTable(PathBuf),
}

impl GroupSpec {
    /// Order of the group this recipe builds (file size unknown until load).
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => Some(2 * n),
            GroupSpec::Semidirect { n, m, .. } => Some(n * m),
            GroupSpec::DirectProduct(a, b) => Some(a.order()? * b.order()?),
            GroupSpec::ExternalTable(_) => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Semidirect { n, m, k } => write!(f, "sd:{n},{m},{k}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "prod:{a}*{b}"),
            GroupSpec::ExternalTable(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A finite group as an explicit multiplication table.
///
/// Invariants (checked at construction):
/// - index 0 is the identity,
/// - `mul[x][inv[x]] = mul[inv[x]][x] = 0`,
/// - every row and column of `mul` is a permutation of `0..n`,
/// - multiplication is associative.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    spec_id: Option<String>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupTable(order={}, id={:?})",
            self.order, self.spec_id
        )
    }
}

impl GroupTable {
    /// Builds a table from raw data, checking every axiom.
    pub fn from_raw(
        order: usize,
        mul: Vec<u16>,
        labels: Option<Vec<String>>,
        spec_id: Option<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::TableInvalid("order must be at least 1".into()));
        }
        let cap = order_cap();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        if mul.len() != order * order {
            return Err(Error::TableInvalid(format!(
                "mul table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if let Some(bad) = mul.iter().find(|&&e| e as usize >= order) {
            return Err(Error::TableInvalid(format!(
                "entry {bad} is outside 0..{order}"
            )));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != order {
                    return Err(Error::TableInvalid(format!(
                        "{} labels for {} elements",
                        l.len(),
                        order
                    )));
                }
                l
            }
            None => (0..order).map(|i| format!("x{i}")).collect(),
        };
        // Inverses are derived from the table, then re-checked with the rest
        // of the axioms.
        let mut inv = vec![0u16; order];
        for x in 0..order {
            match (0..order).find(|&y| mul[x * order + y] as usize == 0) {
                Some(y) => inv[x] = y as u16,
                None => {
                    return Err(Error::TableInvalid(format!(
                        "element {x} has no right inverse"
                    )))
                }
            }
        }
        let table = GroupTable {
            order,
            mul,
            inv,
            labels,
            spec_id,
        };
        table.check_axioms().map_err(Error::TableInvalid)?;
        Ok(table)
    }

    /// Constructs the group described by `spec`.
    ///
    /// Element ordering is deterministic for a given spec, so two builds of
    /// the same recipe produce identical tables. Recipe-built tables satisfy
    /// the axioms by construction and skip the O(n^3) release-mode check
    /// (debug builds still run it); ingested tables are always fully checked.
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        let table = match spec {
            GroupSpec::Cyclic(n) => build_cyclic(*n)?,
            GroupSpec::Dihedral(n) => build_dihedral(*n)?,
            GroupSpec::Semidirect { n, m, k } => build_semidirect(*n, *m, *k)?,
            GroupSpec::DirectProduct(a, b) => {
                let left = GroupTable::build(a)?;
                let right = GroupTable::build(b)?;
                direct_product(&left, &right)?
            }
            GroupSpec::ExternalTable(path) => return load_table_file(path),
        };
        let mut table = table;
        table.spec_id = Some(spec.to_string());
        debug_assert_eq!(table.check_axioms(), Ok(()));
        Ok(table)
    }

    /// Assembles a recipe-built table, deriving inverses without the full
    /// axiom sweep.
    fn from_recipe(order: usize, mul: Vec<u16>, labels: Vec<String>) -> Self {
        let mut inv = vec![0u16; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("recipe table has inverses by construction");
            inv[x] = y as u16;
        }
        GroupTable {
            order,
            mul,
            inv,
            labels,
            spec_id: None,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn spec_id(&self) -> Option<&str> {
        self.spec_id.as_deref()
    }

    pub fn set_spec_id(&mut self, id: impl Into<String>) {
        self.spec_id = Some(id.into());
    }

    /// Human identifier for reports: the spec id when present, otherwise the
    /// order.
    pub fn display_name(&self) -> String {
        self.spec_id
            .clone()
            .unwrap_or_else(|| format!("order-{}", self.order))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, e: usize) -> usize {
        let mut x = e;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        k
    }

    /// `{ a*x : x in set }`
    pub fn left_mul_set(&self, a: usize, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for x in set.iter() {
            out.insert(self.mul(a, x));
        }
        out
    }

    /// `{ x*a : x in set }`
    pub fn right_mul_set(&self, set: &ElementSet, a: usize) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for x in set.iter() {
            out.insert(self.mul(x, a));
        }
        out
    }

    /// `{ x^-1 : x in set }`
    pub fn set_inverse(&self, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for x in set.iter() {
            out.insert(self.inv(x));
        }
        out
    }

    /// `{ a*b : a in lhs, b in rhs }`
    pub fn set_product(&self, lhs: &ElementSet, rhs: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for a in lhs.iter() {
            for b in rhs.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// Checks identity, inverses, Latin-square and associativity axioms.
    /// Returns a message naming the first violated axiom.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(format!(
                    "identity axiom violated: index 0 does not fix element {x}"
                ));
            }
        }
        for x in 0..n {
            let i = self.inv(x);
            if self.mul(x, i) != 0 || self.mul(i, x) != 0 {
                return Err(format!("inverse axiom violated at element {x}"));
            }
        }
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                let v = self.mul(r, c);
                if seen[v] {
                    return Err(format!("Latin-square axiom violated in row {r}"));
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..n {
                let v = self.mul(r, c);
                if seen[v] {
                    return Err(format!("Latin-square axiom violated in column {c}"));
                }
                seen[v] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!(
                            "associativity violated at ({a}, {b}, {c})"
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Pure predicate form of the axiom check.
pub fn verify_group_axioms(table: &GroupTable) -> bool {
    table.check_axioms().is_ok()
}

fn build_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidSpec("cyclic order must be at least 1".into()));
    }
    check_cap(n)?;
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = ((i + j) % n) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    Ok(GroupTable::from_recipe(n, mul, labels))
}

fn build_dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidSpec(
            "dihedral parameter must be at least 1".into(),
        ));
    }
    let order = 2 * n;
    check_cap(order)?;
    // Indices 0..n are rotations r^i, indices n..2n are reflections r^i s.
    let rot = |i: usize| i % n;
    let mut mul = vec![0u16; order * order];
    for i in 0..n {
        for j in 0..n {
            mul[i * order + j] = rot(i + j) as u16;
            mul[i * order + (n + j)] = (n + rot(i + j)) as u16;
            mul[(n + i) * order + j] = (n + rot(n + i - j)) as u16;
            mul[(n + i) * order + (n + j)] = rot(n + i - j) as u16;
        }
    }
    let labels = (0..order)
        .map(|e| {
            if e == 0 {
                "e".to_string()
            } else if e < n {
                if e == 1 {
                    "r".to_string()
                } else {
                    format!("r^{e}")
                }
            } else if e == n {
                "s".to_string()
            } else if e == n + 1 {
                "r*s".to_string()
            } else {
                format!("r^{}*s", e - n)
            }
        })
        .collect();
    Ok(GroupTable::from_recipe(order, mul, labels))
}

fn build_semidirect(n: usize, m: usize, k: usize) -> Result<GroupTable> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidSpec("orders must be at least 1".into()));
    }
    if k.gcd(&n) != 1 {
        return Err(Error::InvalidSpec(format!(
            "gcd({k}, {n}) must be 1 for the twist to be an automorphism"
        )));
    }
    if pow_mod(k, m, n) != 1 % n {
        return Err(Error::InvalidSpec(format!(
            "{k}^{m} must be 1 mod {n} for the twist to have order dividing {m}"
        )));
    }
    let order = n * m;
    check_cap(order)?;
    // Elements are pairs (i, j), i in the base cycle, j in the acting cycle;
    // index = i*m + j. Product: (i, j)(i', j') = (i + i'*k^j mod n, j + j' mod m).
    let twist: Vec<usize> = (0..m).map(|j| pow_mod(k, j, n)).collect();
    let mut mul = vec![0u16; order * order];
    for i in 0..n {
        for (j, &tw) in twist.iter().enumerate() {
            for i2 in 0..n {
                for j2 in 0..m {
                    let a = i * m + j;
                    let b = i2 * m + j2;
                    let ri = (i + i2 * tw) % n;
                    let rj = (j + j2) % m;
                    mul[a * order + b] = (ri * m + rj) as u16;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|e| format!("({};{})", e / m, e % m))
        .collect();
    Ok(GroupTable::from_recipe(order, mul, labels))
}

fn direct_product(left: &GroupTable, right: &GroupTable) -> Result<GroupTable> {
    let (ol, or) = (left.order(), right.order());
    let order = ol * or;
    check_cap(order)?;
    let mut mul = vec![0u16; order * order];
    for a1 in 0..ol {
        for a2 in 0..or {
            for b1 in 0..ol {
                for b2 in 0..or {
                    let a = a1 * or + a2;
                    let b = b1 * or + b2;
                    mul[a * order + b] = (left.mul(a1, b1) * or + right.mul(a2, b2)) as u16;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|e| format!("({},{})", left.label(e / or), right.label(e % or)))
        .collect();
    Ok(GroupTable::from_recipe(order, mul, labels))
}

fn check_cap(order: usize) -> Result<()> {
    let cap = order_cap();
    if order > cap {
        Err(Error::CapExceeded { order, cap })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Cayley-table file format
// ---------------------------------------------------------------------------

/// JSON wire form of a Cayley table:
/// `{ "order": n, "mul": [[...], ...], "labels": [...]?, "id": "..."? }`.
///
/// `mul` is row-major with element indices; the identity must be index 0.
/// `id` is a free-form provenance annotation (e.g. a GAP-style id) that is
/// carried through but never verified.
#[derive(Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

impl TableFile {
    pub fn from_table(table: &GroupTable) -> Self {
        let n = table.order();
        TableFile {
            order: n,
            mul: (0..n)
                .map(|a| (0..n).map(|b| table.mul(a, b)).collect())
                .collect(),
            labels: Some(table.labels().to_vec()),
            id: table.spec_id().map(str::to_string),
        }
    }

    pub fn into_table(self) -> Result<GroupTable> {
        let n = self.order;
        if self.mul.len() != n {
            return Err(Error::TableInvalid(format!(
                "mul has {} rows, expected {n}",
                self.mul.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in self.mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::TableInvalid(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &e in row {
                if e >= n {
                    return Err(Error::TableInvalid(format!(
                        "row {r} contains index {e}, outside 0..{n}"
                    )));
                }
                flat.push(e as u16);
            }
        }
        GroupTable::from_raw(n, flat, self.labels, self.id)
    }
}

/// Loads and fully validates a Cayley-table JSON file.
pub fn load_table_file(path: &Path) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path)?;
    let file: TableFile = serde_json::from_str(&text)?;
    let mut table = file.into_table()?;
    if table.spec_id.is_none() {
        table.spec_id = Some(format!("file:{}", path.display()));
    }
    Ok(table)
}

/// Serializes a table to the JSON wire format.
pub fn table_to_json(table: &GroupTable) -> serde_json::Value {
    serde_json::to_value(TableFile::from_table(table)).expect("table serialization cannot fail")
}
