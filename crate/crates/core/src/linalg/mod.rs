//! Dense complex linear algebra and the bipartite transforms every bound consumes.
//!
//! Composite indices are A-major: the basis vector `|i⟩ ⊗ |k⟩` sits at row
//! `i * d2 + k`, which is the layout produced by the Kronecker product.

mod bloch;
mod gell_mann;
mod norms;
mod reshuffle;
mod state;

pub use bloch::{bloch_compose, bloch_decompose, BlochForm};
pub use gell_mann::{gell_mann_basis, GellMannBasis};
pub use norms::{frobenius_norm, singular_values, spectral_norm, trace_norm};
pub use reshuffle::{
    partial_transpose, partial_transpose_matrix, realign, realign_matrix, schmidt_coefficients,
    schmidt_decomposition, SchmidtDecomposition,
};
pub use state::{DensityMatrix, StateVector};

use alloc::vec::Vec;
use nalgebra::{DVector, SymmetricEigen};

use crate::{ComplexMatrix, Error, Result, C64};

pub(crate) fn check_local_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    Ok(())
}

pub(crate) fn check_square(m: &ComplexMatrix, n: usize) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if m.nrows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.nrows(),
        });
    }
    Ok(())
}

pub(crate) fn check_finite(m: &ComplexMatrix) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Largest entrywise modulus of `M - M†`.
pub fn hermitian_deviation(m: &ComplexMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub(crate) fn check_hermitian(m: &ComplexMatrix) -> Result<()> {
    let deviation = hermitian_deviation(m);
    if deviation > crate::tol::HERMITIAN {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// `(M + M†) / 2`, removing round-off asymmetry before an eigensolve.
pub(crate) fn hermitian_part(m: &ComplexMatrix) -> ComplexMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let mut values: Vec<f64> = SymmetricEigen::new(hermitian_part(m))
        .eigenvalues
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn min_eigenvalue(m: &ComplexMatrix) -> f64 {
    hermitian_eigenvalues(m).first().copied().unwrap_or(0.0)
}

/// Largest eigenvalue of a Hermitian matrix and a unit eigenvector for it.
pub fn top_eigenpair(m: &ComplexMatrix) -> (f64, DVector<C64>) {
    let eig = SymmetricEigen::new(hermitian_part(m));
    let (idx, value) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty matrix");
    let v = eig.eigenvectors.column(idx).into_owned();
    let norm = v.norm();
    (value, v.unscale(norm))
}

pub fn trace(m: &ComplexMatrix) -> C64 {
    m.diagonal().sum()
}

/// `tr(A B)` without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..a.nrows() {
        for k in 0..a.ncols() {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

pub fn identity(n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n, n)
}
