use alloc::vec::Vec;
use nalgebra::{DVector, Matrix3, Vector3};
use num_traits::Float;

use super::lower::{correlation_matrix, correlation_rank, det_sign};
use super::{alpha_correlation, alpha_rank_one, build_witness, WitnessOperator};
use crate::linalg::{bloch_compose, schmidt_decomposition, BlochForm, DensityMatrix, StateVector};
use crate::{tol, Error, RealMatrix, Result, C64};

/// Rank-one `L = |Φ⟩⟨Φ|` with `|Φ⟩ = d^{-1/2} Σ_r |a_r⟩|b_r⟩` maximally
/// entangled in the Schmidt basis of `psi`; `α(L) = 1/d`.
pub fn construct_l_pure(psi: &StateVector) -> Result<WitnessOperator> {
    let (d1, d2) = (psi.d1(), psi.d2());
    let dec = schmidt_decomposition(psi);
    let d = dec.coefficients.len();
    let mut phi = DVector::<C64>::zeros(d1 * d2);
    for (a, b) in dec.a_vectors.iter().zip(&dec.b_vectors) {
        phi += a.kronecker(b);
    }
    let phi = StateVector::normalized(d1, d2, phi.as_slice().to_vec())?;
    debug_assert!((phi.amplitudes().norm() - 1.0).abs() < 1e-12 && d > 0);
    let alpha = alpha_rank_one(&phi);
    build_witness(phi.projector(), d1, d2, alpha)
}

/// Correlation-only `L` with `R_L = U Σ' Vᵀ / (2 √rank)`, where
/// `R_ρ = U Σ Vᵀ` and `Σ'` keeps the sign pattern of `Σ`.
///
/// `‖R_L‖_HS = 1/2`, so the traceless part of `d1 d2 L` has Hilbert-Schmidt
/// norm 1 and `L` stays positive semidefinite.
pub fn construct_l_mixed(rho: &DensityMatrix) -> Result<WitnessOperator> {
    let (d1, d2) = (rho.d1(), rho.d2());
    let r = correlation_matrix(rho);
    if r.amax() <= tol::CORRELATION_ZERO {
        return Err(Error::NotConstructible(
            "correlation matrix vanishes; the bound is trivially 0",
        ));
    }
    let svd = r.clone().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    let mut sorted: Vec<f64> = svd.singular_values.iter().copied().collect();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let rank = correlation_rank(&sorted);
    let cutoff = tol::RANK_RELATIVE * sorted[0];
    let c = 2.0 * Float::sqrt(rank as f64);

    let mut r_l = RealMatrix::zeros(r.nrows(), r.ncols());
    for (k, &sigma) in svd.singular_values.iter().enumerate() {
        if sigma > cutoff {
            r_l += u.column(k) * v_t.row(k);
        }
    }
    r_l.unscale_mut(c);

    let l = bloch_compose(&BlochForm::correlation_only(d1, d2, r_l)?);
    let alpha = alpha_correlation(&l, d1, d2)?;
    build_witness(l, d1, d2, alpha)
}

/// Real SVD `R = O1 diag(m1, m2, ε m3) O2ᵀ` with `m` nonincreasing and
/// `O1`, `O2` proper rotations; SVD reflections are folded into the third
/// column of each factor and into `ε`.
fn proper_svd3(r: &Matrix3<f64>) -> (Matrix3<f64>, Vector3<f64>, f64, Matrix3<f64>) {
    let svd = r.svd(true, true);
    let u = svd.u.expect("requested U");
    let v = svd.v_t.expect("requested V^T").transpose();
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));

    let mut o1 =
        Matrix3::from_columns(&[u.column(order[0]), u.column(order[1]), u.column(order[2])]);
    let mut o2 =
        Matrix3::from_columns(&[v.column(order[0]), v.column(order[1]), v.column(order[2])]);
    let m = Vector3::new(
        svd.singular_values[order[0]],
        svd.singular_values[order[1]],
        svd.singular_values[order[2]],
    );
    let mut epsilon = 1.0;
    if o1.determinant() < 0.0 {
        o1.column_mut(2).neg_mut();
        epsilon = -epsilon;
    }
    if o2.determinant() < 0.0 {
        o2.column_mut(2).neg_mut();
        epsilon = -epsilon;
    }
    (o1, m, epsilon, o2)
}

/// Two-qubit `L = (1/4)(I⊗I + Σ r'_ij σ_i⊗σ_j)` with `R_L = O1 diag(r) O2ᵀ`
/// and `r` the best of the candidate corners `(0,0,0)`, `(1,1,-1)`,
/// `(1/3,1/3,1/3)` of the positivity tetrahedron.
pub fn construct_l_qubit(rho: &DensityMatrix) -> Result<WitnessOperator> {
    if (rho.d1(), rho.d2()) != (2, 2) {
        return Err(Error::NotApplicable(
            "two-qubit construction needs a 2x2 system",
        ));
    }
    let r_dyn = correlation_matrix(rho);
    let r = Matrix3::from_fn(|i, j| r_dyn[(i, j)]);
    let (o1, m, _, o2) = proper_svd3(&r);
    let s = det_sign(&r_dyn);
    let b = Vector3::new(m[0] - 1.0, m[1], s * m[2]);

    let third = 1.0 / 3.0;
    let corners = [
        Vector3::new(0.0, 0.0, 0.0),
        Vector3::new(1.0, 1.0, -1.0),
        Vector3::new(third, third, third),
    ];
    let mut best = corners[0];
    let mut best_value = best.dot(&b);
    for corner in &corners[1..] {
        let value = corner.dot(&b);
        if value > best_value {
            best = *corner;
            best_value = value;
        }
    }

    let r_l = o1 * Matrix3::from_diagonal(&best) * o2.transpose();
    let r_l = RealMatrix::from_fn(3, 3, |i, j| r_l[(i, j)]);
    let l = bloch_compose(&BlochForm::correlation_only(2, 2, r_l)?);
    let alpha = alpha_correlation(&l, 2, 2)?;
    build_witness(l, 2, 2, alpha)
}
