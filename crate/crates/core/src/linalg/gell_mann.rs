use alloc::vec::Vec;
use num_traits::Float;

use super::check_local_dim;
use crate::{ComplexMatrix, Result, C64};

/// Nonzero entries `(row, col, value)` of one generator.
pub(crate) type SparseEntries = Vec<(usize, usize, C64)>;

/// The `d² - 1` generalized Gell-Mann matrices of `su(d)`, normalized so
/// that `tr(λ_i λ_j) = 2 δ_ij`.
///
/// Order: symmetric pair matrices for `j < k` (lexicographic), then the
/// antisymmetric pair matrices in the same order, then the `d - 1`
/// diagonal matrices by increasing rank. For `d = 2` this is `(σx, σy, σz)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GellMannBasis {
    d: usize,
    matrices: Vec<ComplexMatrix>,
    sparse: Vec<SparseEntries>,
}

pub fn gell_mann_basis(d: usize) -> Result<GellMannBasis> {
    check_local_dim(d)?;
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);

    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|j| (j + 1..d).map(move |k| (j, k)))
        .collect();
    let mut sparse: Vec<SparseEntries> = Vec::with_capacity(d * d - 1);
    for &(j, k) in &pairs {
        sparse.push(alloc::vec![(j, k, one), (k, j, one)]);
    }
    for &(j, k) in &pairs {
        sparse.push(alloc::vec![(j, k, -i), (k, j, i)]);
    }
    for l in 1..d {
        let norm = Float::sqrt(2.0 / (l * (l + 1)) as f64);
        let mut entries: SparseEntries = (0..l).map(|m| (m, m, C64::new(norm, 0.0))).collect();
        entries.push((l, l, C64::new(-(l as f64) * norm, 0.0)));
        sparse.push(entries);
    }

    let matrices = sparse
        .iter()
        .map(|entries| {
            let mut m = ComplexMatrix::zeros(d, d);
            for &(r, c, v) in entries {
                m[(r, c)] = v;
            }
            m
        })
        .collect();
    Ok(GellMannBasis {
        d,
        matrices,
        sparse,
    })
}

impl GellMannBasis {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[ComplexMatrix] {
        &self.matrices
    }

    pub(crate) fn sparse(&self) -> &[SparseEntries] {
        &self.sparse
    }
}

impl core::ops::Index<usize> for GellMannBasis {
    type Output = ComplexMatrix;

    fn index(&self, idx: usize) -> &ComplexMatrix {
        &self.matrices[idx]
    }
}
