//! Built-in Cayley tables for groups the recipe grammar cannot express.
//!
//! These are constructed programmatically and shipped as JSON files under
//! `data/` for CLI use; a test pins the files to these constructions. The
//! GAP-style ids attached to the order-32 tables are provenance annotations
//! taken from the literature, not verified by isomorphism testing; what the
//! crate does verify is behavioral (orders, abelian index-2 subgroups of the
//! right exponent, absence of cyclic index-2 subgroups, capacities).

use crate::error::Result;
use crate::group::GroupTable;

/// Dicyclic group of order `4n`: generators `a` of order `2n` and `b` with
/// `b^2 = a^n`, `b a b^-1 = a^-1`. Elements are `a^i b^j` with
/// `i < 2n`, `j < 2`, indexed `i*2 + j`.
pub fn dicyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let two_n = 2 * n;
    let order = 4 * n;
    let idx = |i: usize, j: usize| (i % two_n) * 2 + j;
    let mut mul = vec![0u16; order * order];
    for i in 0..two_n {
        for j in 0..2 {
            for k in 0..two_n {
                for l in 0..2 {
                    let (ri, rj) = if j == 0 {
                        (i + k, l)
                    } else if l == 0 {
                        (two_n + i - k, 1)
                    } else {
                        (two_n + i - k + n, 0)
                    };
                    mul[idx(i, j) * order + idx(k, l)] = idx(ri, rj % 2) as u16;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|e| {
            let (i, j) = (e / 2, e % 2);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (0, 1) => "b".to_string(),
                (1, 0) => "a".to_string(),
                (i, 0) => format!("a^{i}"),
                (1, 1) => "a*b".to_string(),
                (i, _) => format!("a^{i}*b"),
            }
        })
        .collect();
    GroupTable::from_raw(order, mul, Some(labels), None).expect("dicyclic tables are groups")
}

/// The quaternion group of order 8.
pub fn quaternion8() -> GroupTable {
    let mut g = dicyclic(2);
    g.set_spec_id("q8");
    g
}

/// The generalized quaternion group of order 16.
pub fn quaternion16() -> GroupTable {
    let mut g = dicyclic(4);
    g.set_spec_id("q16");
    g
}

/// Extension of an abelian group (given by coordinate orders) by an order-2
/// element acting by a permutation of the coordinates. Elements are
/// `(coords, eps)` with `eps` in {0, 1}, indexed mixed-radix with `eps` as
/// the least significant digit.
fn abelian_by_coordinate_swap(orders: &[usize], perm: &[usize]) -> GroupTable {
    assert_eq!(orders.len(), perm.len());
    // The permutation must be an involution preserving coordinate orders.
    for (i, &p) in perm.iter().enumerate() {
        assert_eq!(perm[p], i);
        assert_eq!(orders[p], orders[i]);
    }
    let base: usize = orders.iter().product();
    let order = base * 2;

    let coords_of = |mut x: usize| -> Vec<usize> {
        let mut c = vec![0usize; orders.len()];
        for i in (0..orders.len()).rev() {
            c[i] = x % orders[i];
            x /= orders[i];
        }
        c
    };
    let index_of = |c: &[usize]| -> usize {
        let mut x = 0usize;
        for i in 0..orders.len() {
            x = x * orders[i] + c[i];
        }
        x
    };

    let mut mul = vec![0u16; order * order];
    for xa in 0..base {
        for ea in 0..2 {
            let a = coords_of(xa);
            for xb in 0..base {
                for eb in 0..2 {
                    let b = coords_of(xb);
                    // (a, ea)(b, eb) = (a + perm^ea(b), ea xor eb)
                    let mut sum = vec![0usize; orders.len()];
                    for i in 0..orders.len() {
                        let bi = if ea == 0 { b[i] } else { b[perm[i]] };
                        sum[i] = (a[i] + bi) % orders[i];
                    }
                    let lhs = xa * 2 + ea;
                    let rhs = xb * 2 + eb;
                    mul[lhs * order + rhs] = (index_of(&sum) * 2 + (ea ^ eb)) as u16;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|e| {
            let coords = coords_of(e / 2);
            let tuple = coords
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            if e % 2 == 0 {
                format!("({tuple})")
            } else {
                format!("({tuple})t")
            }
        })
        .collect();
    GroupTable::from_raw(order, mul, Some(labels), None)
        .expect("coordinate-swap extensions are groups")
}

/// Order-32 group of type (C4 x C4) : C2, the twist swapping the two
/// coordinates. Annotated with its GAP-style id from the literature.
pub fn g32_11() -> GroupTable {
    let mut g = abelian_by_coordinate_swap(&[4, 4], &[1, 0]);
    g.set_spec_id("[32,11]");
    g
}

/// Order-32 group of type (C2 x C2 x C2 x C2) : C2, the twist swapping the
/// coordinate pairs. Annotated with its GAP-style id from the literature.
pub fn g32_27() -> GroupTable {
    let mut g = abelian_by_coordinate_swap(&[2, 2, 2, 2], &[2, 3, 0, 1]);
    g.set_spec_id("[32,27]");
    g
}

/// All built-in tables with their short names, in catalog order.
pub fn builtin_tables() -> Vec<(&'static str, GroupTable)> {
    vec![
        ("q8", quaternion8()),
        ("q16", quaternion16()),
        ("[32,11]", g32_11()),
        ("[32,27]", g32_27()),
    ]
}

/// Looks up a built-in table by its short name.
pub fn builtin(name: &str) -> Option<GroupTable> {
    builtin_tables()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
}

/// File stem used for a built-in table under `data/`.
pub fn builtin_file_stem(name: &str) -> String {
    match name {
        "[32,11]" => "g32_11".to_string(),
        "[32,27]" => "g32_27".to_string(),
        other => other.to_string(),
    }
}

/// Writes every built-in table to `dir` as JSON files.
pub fn export_builtin_tables(dir: &std::path::Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, table) in builtin_tables() {
        let file = crate::group::TableFile::from_table(&table);
        let path = dir.join(format!("{}.json", builtin_file_stem(name)));
        std::fs::write(&path, serde_json::to_string(&file)?)?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{load_table_file, verify_group_axioms};
    use crate::subgroups::enumerate_subgroups;

    #[test]
    fn shipped_data_files_match_constructions() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        for (name, table) in builtin_tables() {
            let path = dir.join(format!("{}.json", builtin_file_stem(name)));
            let loaded = load_table_file(&path)
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(loaded, table, "{name} data file drifted from its construction");
        }
    }

    #[test]
    fn quaternion8_structure() {
        let g = quaternion8();
        assert_eq!(g.order(), 8);
        assert!(verify_group_axioms(&g));
        assert!(!g.is_abelian());
        // One element of order 2 (the central involution).
        let involutions = (1..8).filter(|&e| g.element_order(e) == 2).count();
        assert_eq!(involutions, 1);
        // Every subgroup is normal.
        let subs = enumerate_subgroups(&g).unwrap();
        assert!(subs.iter().all(|s| s.is_normal));
        assert_eq!(subs.len(), 6);
    }

    #[test]
    fn quaternion16_structure() {
        let g = quaternion16();
        assert_eq!(g.order(), 16);
        assert!(verify_group_axioms(&g));
        assert!(!g.is_abelian());
        let involutions = (1..16).filter(|&e| g.element_order(e) == 2).count();
        assert_eq!(involutions, 1);
        // Has a cyclic (abelian) subgroup of index 2.
        let subs = enumerate_subgroups(&g).unwrap();
        assert!(subs
            .iter()
            .any(|s| s.order == 8 && s.is_abelian && s.is_cyclic(&g)));
    }

    #[test]
    fn order_32_tables_structure() {
        for (g, exponent) in [(g32_11(), 4), (g32_27(), 2)] {
            assert_eq!(g.order(), 32);
            assert!(verify_group_axioms(&g));
            assert!(!g.is_abelian());
            let subs = enumerate_subgroups(&g).unwrap();
            // An abelian normal subgroup of index 2 with the stated exponent,
            // but no cyclic subgroup of index 2.
            let index2: Vec<_> = subs.iter().filter(|s| s.order == 16).collect();
            assert!(index2.iter().any(|s| s.is_abelian
                && s.is_normal
                && s.elements.iter().all(|e| {
                    let o = g.element_order(e);
                    o <= exponent && exponent % o == 0
                })
                && s.elements.iter().any(|e| g.element_order(e) == exponent)));
            assert!(index2.iter().all(|s| !s.is_cyclic(&g)));
        }
    }
}
