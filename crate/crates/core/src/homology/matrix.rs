use std::collections::HashSet;

use super::FieldSpec;
use crate::complexes::SimplicialComplex;
use crate::error::{invalid, Result};

/// A matrix stored as `(row, col, value)` triples with nonzero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    row_count: usize,
    col_count: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(row_count: usize, col_count: usize, entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(entries.len());
        for &(r, c, v) in &entries {
            if r >= row_count || c >= col_count {
                return invalid(format!("entry ({r}, {c}) outside a {row_count}x{col_count} matrix"));
            }
            if v == 0 {
                return invalid(format!("explicit zero at ({r}, {c})"));
            }
            if !seen.insert((r, c)) {
                return invalid(format!("duplicate entry at ({r}, {c})"));
            }
        }
        Ok(SparseMatrix {
            row_count,
            col_count,
            entries,
        })
    }

    pub fn zero(row_count: usize, col_count: usize) -> Self {
        SparseMatrix {
            row_count,
            col_count,
            entries: Vec::new(),
        }
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn col_count(&self) -> usize {
        self.col_count
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            row_count: self.col_count,
            col_count: self.row_count,
            entries: self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect(),
        }
    }

    /// Rows as column-sorted `(col, value)` lists.
    pub fn rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.row_count];
        for &(r, c, v) in &self.entries {
            rows[r].push((c, v));
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|e| e.0);
        }
        rows
    }

    /// Exact integer product `self * rhs`, or `None` on overflow.
    pub fn checked_mul(&self, rhs: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.col_count, rhs.row_count, "dimension mismatch");
        let rhs_rows = rhs.rows();
        let mut out = Vec::new();
        for (r, row) in self.rows().into_iter().enumerate() {
            let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
            for (k, a) in row {
                for &(c, b) in &rhs_rows[k] {
                    let e = acc.entry(c).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            out.extend(acc.into_iter().filter(|&(_, v)| v != 0).map(|(c, v)| (r, c, v)));
        }
        Some(SparseMatrix {
            row_count: self.row_count,
            col_count: rhs.col_count,
            entries: out,
        })
    }
}

/// Matrix of `∂_i : C_i -> C_{i-1}` in the augmented chain complex.
///
/// Rows are indexed by `(i-1)`-faces and columns by `i`-faces, both in the
/// complex's stored order. Removing the `k`-th vertex of an increasing face
/// carries the sign `(-1)^k`. `C_{-1}` is spanned by the empty face, so `∂_0`
/// is the `1 x f_0` augmentation. For `i` outside `-1..=dim+1` the result is
/// the `0 x 0` matrix. Over `F_p` entries are reduced into `[0, p)`.
pub fn boundary_matrix(c: &SimplicialComplex, i: isize, field: FieldSpec) -> Result<SparseMatrix> {
    if c.is_void() {
        return invalid("the void complex has no chain complex");
    }
    if i < -1 || i > c.dim() + 1 {
        return Ok(SparseMatrix::zero(0, 0));
    }
    let rows = if i == -1 { 0 } else { c.face_count(i - 1) };
    let cols = c.face_count(i);
    let mut entries = Vec::with_capacity(cols * (i.max(0) as usize + 1));
    if i == 0 {
        entries.extend((0..cols).map(|col| (0, col, 1)));
    } else if i > 0 {
        let mut sub = Vec::with_capacity(i as usize);
        for (col, face) in c.faces(i).iter().enumerate() {
            for k in 0..face.len() {
                sub.clear();
                sub.extend_from_slice(&face[..k]);
                sub.extend_from_slice(&face[k + 1..]);
                let row = c
                    .index_of(&sub)
                    .expect("complex is closed under subsets");
                let sign = if k % 2 == 0 { 1 } else { -1 };
                entries.push((row, col, field.reduce(sign)));
            }
        }
    }
    Ok(SparseMatrix {
        row_count: rows,
        col_count: cols,
        entries,
    })
}
