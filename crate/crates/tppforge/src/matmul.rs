//! Matrix multiplication through the group algebra.
//!
//! A TPP triple (S, T, U) indexes an |S| x |T| matrix A by pairs (s, t) and
//! a |T| x |U| matrix B by (t, u). Embedding
//! `A -> sum A[s,t] * basis(s^-1 t)` and `B -> sum B[t,u] * basis(t^-1 u)`,
//! convolving the two integer group-algebra vectors, and reading the
//! coefficient at `s^-1 u` recovers exactly `(AB)[s,u]`. The TPP is
//! precisely the condition that makes the readout collision-free, so the
//! operation refuses non-TPP triples.
//!
//! All arithmetic is exact (i64); no floats anywhere.

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::tpp::{is_tpp_quotient, TppTriple};

/// An exact integer matrix whose rows and columns are indexed by the
/// elements of two sets of a TPP triple (in increasing element order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedMatrix {
    pub row_index: Vec<usize>,
    pub col_index: Vec<usize>,
    /// Row-major, `row_index.len() * col_index.len()` entries.
    pub entries: Vec<i64>,
}

impl IndexedMatrix {
    pub fn new(row_index: Vec<usize>, col_index: Vec<usize>, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != row_index.len() * col_index.len() {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                row_index.len(),
                col_index.len()
            )));
        }
        Ok(IndexedMatrix {
            row_index,
            col_index,
            entries,
        })
    }

    /// Builds from nested rows, e.g. parsed JSON `[[1,2],[3,4]]`.
    pub fn from_rows(
        row_index: Vec<usize>,
        col_index: Vec<usize>,
        rows: &[Vec<i64>],
    ) -> Result<Self> {
        if rows.len() != row_index.len() || rows.iter().any(|r| r.len() != col_index.len()) {
            return Err(Error::InvalidMatrix(format!(
                "expected {} rows of {} entries",
                row_index.len(),
                col_index.len()
            )));
        }
        let entries = rows.iter().flatten().copied().collect();
        IndexedMatrix::new(row_index, col_index, entries)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.col_index.len() + c]
    }

    pub fn rows(&self) -> usize {
        self.row_index.len()
    }

    pub fn cols(&self) -> usize {
        self.col_index.len()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows())
            .map(|r| (0..self.cols()).map(|c| self.get(r, c)).collect())
            .collect()
    }
}

/// Convolution of two integer group-algebra vectors of length |G|:
/// `out[x*y] += a[x] * b[y]`, O(|G|^2) exact.
pub fn convolve(g: &GroupTable, a: &[i64], b: &[i64]) -> Vec<i64> {
    assert_eq!(a.len(), g.order());
    assert_eq!(b.len(), g.order());
    let mut out = vec![0i64; g.order()];
    for (x, &ax) in a.iter().enumerate() {
        if ax == 0 {
            continue;
        }
        for (y, &by) in b.iter().enumerate() {
            if by != 0 {
                out[g.mul(x, y)] += ax * by;
            }
        }
    }
    out
}

/// Plain triple-loop product of two indexed matrices (the oracle).
pub fn naive_multiply(a: &IndexedMatrix, b: &IndexedMatrix) -> Result<IndexedMatrix> {
    if a.col_index != b.row_index {
        return Err(Error::InvalidMatrix(
            "inner dimensions are indexed by different sets".into(),
        ));
    }
    let mut entries = vec![0i64; a.rows() * b.cols()];
    for r in 0..a.rows() {
        for c in 0..b.cols() {
            let mut acc = 0i64;
            for k in 0..a.cols() {
                acc += a.get(r, k) * b.get(k, c);
            }
            entries[r * b.cols() + c] = acc;
        }
    }
    IndexedMatrix::new(a.row_index.clone(), b.col_index.clone(), entries)
}

/// Multiplies `a` (|S| x |T|) by `b` (|T| x |U|) by convolving in the group
/// algebra and reading coefficients at `s^-1 u`.
///
/// The triple must satisfy the TPP; the recovery guarantee is exactly that
/// property, so non-TPP triples are refused with [`Error::NotATppTriple`].
pub fn group_algebra_multiply(
    g: &GroupTable,
    tr: &TppTriple,
    a: &IndexedMatrix,
    b: &IndexedMatrix,
) -> Result<IndexedMatrix> {
    if !is_tpp_quotient(g, tr) {
        return Err(Error::NotATppTriple);
    }
    let s_index = tr.s.to_vec();
    let t_index = tr.t.to_vec();
    let u_index = tr.u.to_vec();
    if a.row_index != s_index || a.col_index != t_index {
        return Err(Error::InvalidMatrix(
            "left matrix is not indexed by (S, T)".into(),
        ));
    }
    if b.row_index != t_index || b.col_index != u_index {
        return Err(Error::InvalidMatrix(
            "right matrix is not indexed by (T, U)".into(),
        ));
    }

    let mut a_vec = vec![0i64; g.order()];
    for (ri, &s) in s_index.iter().enumerate() {
        for (ci, &t) in t_index.iter().enumerate() {
            a_vec[g.mul(g.inv(s), t)] += a.get(ri, ci);
        }
    }
    let mut b_vec = vec![0i64; g.order()];
    for (ri, &t) in t_index.iter().enumerate() {
        for (ci, &u) in u_index.iter().enumerate() {
            b_vec[g.mul(g.inv(t), u)] += b.get(ri, ci);
        }
    }
    let c_vec = convolve(g, &a_vec, &b_vec);

    let mut entries = vec![0i64; s_index.len() * u_index.len()];
    for (ri, &s) in s_index.iter().enumerate() {
        for (ci, &u) in u_index.iter().enumerate() {
            entries[ri * u_index.len() + ci] = c_vec[g.mul(g.inv(s), u)];
        }
    }
    let product = IndexedMatrix::new(s_index, u_index, entries)?;
    debug_assert_eq!(product, naive_multiply(a, b)?);
    Ok(product)
}
