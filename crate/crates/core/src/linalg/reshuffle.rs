use alloc::vec::Vec;
use nalgebra::DVector;

use super::{check_square, DensityMatrix, StateVector};
use crate::{ComplexMatrix, Result, C64};

/// `ρ^{T_A}` of a density matrix.
pub fn partial_transpose(rho: &DensityMatrix) -> ComplexMatrix {
    partial_transpose_matrix(rho.matrix(), rho.d1(), rho.d2()).expect("validated shape")
}

/// Transposes the subsystem-A indices: `((i,k),(j,l)) ↦ ((j,k),(i,l))`.
pub fn partial_transpose_matrix(m: &ComplexMatrix, d1: usize, d2: usize) -> Result<ComplexMatrix> {
    check_square(m, d1 * d2)?;
    let mut out = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    for i in 0..d1 {
        for j in 0..d1 {
            for k in 0..d2 {
                for l in 0..d2 {
                    out[(j * d2 + k, i * d2 + l)] = m[(i * d2 + k, j * d2 + l)];
                }
            }
        }
    }
    Ok(out)
}

/// Realignment `R(ρ)`, a `d1² × d2²` matrix.
pub fn realign(rho: &DensityMatrix) -> ComplexMatrix {
    realign_matrix(rho.matrix(), rho.d1(), rho.d2()).expect("validated shape")
}

/// Entry `((i,j),(k,l))` of the result is `m[(i,k),(j,l)]`.
pub fn realign_matrix(m: &ComplexMatrix, d1: usize, d2: usize) -> Result<ComplexMatrix> {
    check_square(m, d1 * d2)?;
    let mut out = ComplexMatrix::zeros(d1 * d1, d2 * d2);
    for i in 0..d1 {
        for j in 0..d1 {
            for k in 0..d2 {
                for l in 0..d2 {
                    out[(i * d1 + j, k * d2 + l)] = m[(i * d2 + k, j * d2 + l)];
                }
            }
        }
    }
    Ok(out)
}

/// `|ψ⟩ = Σ_r √μ_r |a_r⟩ ⊗ |b_r⟩` with `√μ_1 ≥ √μ_2 ≥ …`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// Schmidt coefficients `√μ_r`, nonincreasing; length `min(d1, d2)`.
    pub coefficients: Vec<f64>,
    /// Orthonormal vectors on subsystem A.
    pub a_vectors: Vec<DVector<C64>>,
    /// Orthonormal vectors on subsystem B.
    pub b_vectors: Vec<DVector<C64>>,
}

/// SVD of the `d1 × d2` amplitude matrix `M[i][k] = ψ_{i d2 + k}`.
/// With `M = U Σ V†`, `|a_r⟩` is column `r` of `U` and `|b_r⟩` is row `r` of `V†`.
pub fn schmidt_decomposition(psi: &StateVector) -> SchmidtDecomposition {
    let (d1, d2) = (psi.d1(), psi.d2());
    let m = ComplexMatrix::from_row_slice(d1, d2, psi.amplitudes().as_slice());
    let svd = m.svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^dagger");

    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));

    SchmidtDecomposition {
        coefficients: order.iter().map(|&r| svd.singular_values[r]).collect(),
        a_vectors: order.iter().map(|&r| u.column(r).into_owned()).collect(),
        b_vectors: order.iter().map(|&r| v_t.row(r).transpose()).collect(),
    }
}

/// Squared Schmidt coefficients `μ_1 ≥ … ≥ μ_d ≥ 0`, `d = min(d1, d2)`.
pub fn schmidt_coefficients(psi: &StateVector) -> Vec<f64> {
    let (d1, d2) = (psi.d1(), psi.d2());
    let m = ComplexMatrix::from_row_slice(d1, d2, psi.amplitudes().as_slice());
    super::singular_values(&m).iter().map(|s| s * s).collect()
}
