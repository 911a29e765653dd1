use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{
    bloch_decompose, check_finite, check_hermitian, check_square, schmidt_coefficients,
    spectral_norm, top_eigenpair, StateVector,
};
use crate::states::{derive_seed, haar_vector};
use crate::{tol, ComplexMatrix, Error, Result, C64};

/// `α(|ψ⟩⟨ψ|) = μ_1`, the largest squared Schmidt coefficient.
pub fn alpha_rank_one(psi: &StateVector) -> f64 {
    schmidt_coefficients(psi)[0]
}

/// Closed-form `α(L) = 1/(d1d2) + 4/(d1²d2²) ‖R_L‖₂` for a trace-one
/// Hermitian `L` whose local Bloch vectors vanish.
pub fn alpha_correlation(l: &ComplexMatrix, d1: usize, d2: usize) -> Result<f64> {
    let form = bloch_decompose(l, d1, d2)?;
    if form.s().amax() > tol::BLOCH_ZERO || form.t().amax() > tol::BLOCH_ZERO {
        return Err(Error::Precondition(
            "correlation-only closed form needs vanishing local Bloch vectors",
        ));
    }
    let n = (d1 * d2) as f64;
    Ok(1.0 / n + 4.0 / (n * n) * spectral_norm(form.correlation()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariationalOptions {
    /// Independent random product-state starts.
    pub restarts: usize,
    /// Cap on full A/B sweeps per start.
    pub max_iters: usize,
    pub seed: u64,
}

impl Default for VariationalOptions {
    fn default() -> Self {
        Self {
            restarts: 20,
            max_iters: 500,
            seed: 0,
        }
    }
}

/// `(I ⊗ ⟨b|) L (I ⊗ |b⟩)`, a `d1 × d1` operator.
fn contract_b(l: &ComplexMatrix, b: &DVector<C64>, d1: usize, d2: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d1, d1, |i, j| {
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..d2 {
            for m in 0..d2 {
                acc += b[k].conj() * l[(i * d2 + k, j * d2 + m)] * b[m];
            }
        }
        acc
    })
}

/// `(⟨a| ⊗ I) L (|a⟩ ⊗ I)`, a `d2 × d2` operator.
fn contract_a(l: &ComplexMatrix, a: &DVector<C64>, d1: usize, d2: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d2, d2, |k, m| {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..d1 {
            for j in 0..d1 {
                acc += a[i].conj() * l[(i * d2 + k, j * d2 + m)] * a[j];
            }
        }
        acc
    })
}

/// Lower estimate of `α(L) = max ⟨a b| L |a b⟩` over product states by
/// alternating top-eigenvector ascent.
///
/// Each half-step replaces one factor with the top eigenvector of the
/// contracted operator, so the objective never decreases. A start stops once
/// the gain drops below `1e-12` (relative) or after `max_iters` sweeps; the
/// best value over all starts is returned.
pub fn alpha_variational(
    l: &ComplexMatrix,
    d1: usize,
    d2: usize,
    opts: &VariationalOptions,
) -> Result<f64> {
    crate::linalg::check_local_dim(d1)?;
    crate::linalg::check_local_dim(d2)?;
    check_square(l, d1 * d2)?;
    check_finite(l)?;
    check_hermitian(l)?;

    let mut best = f64::NEG_INFINITY;
    for restart in 0..opts.restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(opts.seed, restart as u64));
        // Only the B factor of the starting product state matters: the
        // first half-step overwrites A.
        let mut b = haar_vector(d2, &mut rng);
        let mut objective = f64::NEG_INFINITY;
        for _ in 0..opts.max_iters.max(1) {
            let (_, a) = top_eigenpair(&contract_b(l, &b, d1, d2));
            let (value, new_b) = top_eigenpair(&contract_a(l, &a, d1, d2));
            b = new_b;
            let gain = value - objective;
            objective = value;
            if gain < 1e-12 * value.abs().max(1.0) {
                break;
            }
        }
        best = best.max(objective);
    }
    Ok(best)
}
