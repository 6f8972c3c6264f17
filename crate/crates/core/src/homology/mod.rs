//! Reduced simplicial homology over `Q` and `F_p` via boundary ranks.

mod field;
mod matrix;
pub mod rank;

use serde::{Deserialize, Serialize};

pub use field::FieldSpec;
pub use matrix::{boundary_matrix, SparseMatrix};
pub use rank::rank;

use crate::complexes::{component_count, SimplicialComplex};

/// Dimensions of `H̃_i(Δ; field)` for `-1 <= i <= dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: FieldSpec,
    /// `dims[k]` is `dim H̃_{k-1}`.
    pub dims: Vec<usize>,
}

impl BettiTable {
    /// `dim H̃_i`, zero outside the table.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    /// Smallest `i < bound` with `H̃_i ≠ 0`.
    pub fn first_nonzero_below(&self, bound: isize) -> Option<(isize, usize)> {
        (-1..bound).map(|i| (i, self.get(i))).find(|&(_, d)| d != 0)
    }

    /// `sum_i (-1)^i dim H̃_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Ranks of `∂_0, ..., ∂_{dim+1}` over `field`.
///
/// `∂_0` is the augmentation and `rank ∂_1 = f_0 - #components` over every
/// field, so linear algebra is only needed from `∂_2` on. Those ranks are
/// computed on separate threads.
pub fn boundary_ranks(c: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    let dim = c.dim();
    let mut ranks = vec![0usize; (dim + 2).max(0) as usize];
    if c.is_void() || dim < 0 {
        return ranks;
    }
    ranks[0] = 1;
    if dim >= 1 {
        ranks[1] = c.face_count(0) - component_count(c);
    }
    let higher: Vec<isize> = (2..=dim).collect();
    let computed: Vec<usize> = std::thread::scope(|s| {
        let handles: Vec<_> = higher
            .iter()
            .map(|&i| {
                s.spawn(move || {
                    let m = boundary_matrix(c, i, field).expect("complex is nonvoid");
                    rank(&m, field)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("rank worker panicked")).collect()
    });
    for (i, r) in higher.into_iter().zip(computed) {
        ranks[i as usize] = r;
    }
    ranks
}

/// Reduced Betti numbers `dim H̃_i = f_i - rank ∂_i - rank ∂_{i+1}`.
///
/// The void complex has no chain complex; it gets an empty table.
pub fn reduced_betti_table(c: &SimplicialComplex, field: FieldSpec) -> BettiTable {
    if c.is_void() {
        return BettiTable { field, dims: Vec::new() };
    }
    let ranks = boundary_ranks(c, field);
    let r = |i: isize| -> usize {
        if i < 0 {
            0
        } else {
            ranks.get(i as usize).copied().unwrap_or(0)
        }
    };
    let dims = (-1..=c.dim())
        .map(|i| c.face_count(i) - r(i) - r(i + 1))
        .collect();
    BettiTable { field, dims }
}
