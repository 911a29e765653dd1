use num_traits::Float;

use crate::linalg::{
    bloch_decompose, schmidt_coefficients, singular_values, DensityMatrix, StateVector,
};
use crate::{tol, Error, RealMatrix, Result};

/// Correlation matrix `R_ρ` of a density matrix.
pub fn correlation_matrix(rho: &DensityMatrix) -> RealMatrix {
    bloch_decompose(rho.matrix(), rho.d1(), rho.d2())
        .expect("density matrix satisfies the Bloch contract")
        .into_correlation()
}

/// Number of singular values above `1e-10 σ_max`.
pub fn correlation_rank(singular: &[f64]) -> usize {
    let Some(&max) = singular.first() else {
        return 0;
    };
    if max <= 0.0 {
        return 0;
    }
    singular
        .iter()
        .filter(|&&s| s > tol::RANK_RELATIVE * max)
        .count()
}

/// Sign of `det(R)` with `sgn(0) = 0`.
pub fn det_sign(r: &RealMatrix) -> f64 {
    let det = r.determinant();
    if det > 0.0 {
        1.0
    } else if det < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Pure-state bound `((Σ √μ_i)² - 1) / min(d1, d2)`, i.e. `(‖ρ^{T_A}‖_KF - 1)/d`.
pub fn bound_pure(psi: &StateVector) -> f64 {
    let d = psi.d1().min(psi.d2()) as f64;
    let sum: f64 = schmidt_coefficients(psi)
        .iter()
        .map(|&m| Float::sqrt(m.max(0.0)))
        .sum();
    (sum * sum - 1.0) / d
}

/// General bound `2(‖R_ρ‖_KF - 1) / (d1² d2² √rank R_ρ)`, or 0 when `R_ρ = 0`.
pub fn bound_mixed(rho: &DensityMatrix) -> f64 {
    let r = correlation_matrix(rho);
    if r.amax() <= tol::CORRELATION_ZERO {
        return 0.0;
    }
    let singular = singular_values(&r);
    let rank = correlation_rank(&singular);
    let trace_norm: f64 = singular.iter().sum();
    let n = (rho.d1() * rho.d2()) as f64;
    2.0 * (trace_norm - 1.0) / (n * n * Float::sqrt(rank as f64))
}

/// Two-qubit bound
/// `(1/4) max{0, m1 + m2 - s m3 - 1, (m1 + m2 + s m3 - 1)/3}` with
/// `m1 ≥ m2 ≥ m3` the singular values of `R_ρ` and `s = sgn det R_ρ`.
pub fn bound_qubit(rho: &DensityMatrix) -> Result<f64> {
    if (rho.d1(), rho.d2()) != (2, 2) {
        return Err(Error::NotApplicable("two-qubit bound needs a 2x2 system"));
    }
    let r = correlation_matrix(rho);
    let m = singular_values(&r);
    let s = det_sign(&r);
    let flipped = m[0] + m[1] - s * m[2] - 1.0;
    let face = (m[0] + m[1] + s * m[2] - 1.0) / 3.0;
    Ok(0.25 * flipped.max(face).max(0.0))
}
