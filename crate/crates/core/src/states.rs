//! State families and seeded random generators.
//!
//! Every generator takes an explicit 64-bit seed and draws from a ChaCha8
//! stream keyed by it, so outputs are reproducible bit-for-bit and sweeps can
//! partition work by seed without shared generator state.

use alloc::vec::Vec;
use nalgebra::DVector;
use num_traits::Float;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::linalg::{check_local_dim, DensityMatrix, StateVector};
use crate::{ComplexMatrix, Error, RealMatrix, Result, C64};

fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for sample `index` of a run keyed by `base`, taken from a dedicated
/// ChaCha stream so sample seeds never collide with each other.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(index.wrapping_add(1));
    rng.next_u64()
}

fn check_nonnegative(name: &'static str, a: f64) -> Result<()> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::InvalidParameter {
            name,
            value: a,
            reason: "must be finite and nonnegative",
        });
    }
    Ok(())
}

/// `(a, 0, 0, 1/√2)ᵀ / √(a² + 1/2)`.
pub fn pure_family_2x2(a: f64) -> Result<StateVector> {
    check_nonnegative("a", a)?;
    let norm = Float::sqrt(a * a + 0.5);
    let z = C64::new(0.0, 0.0);
    StateVector::new(
        2,
        2,
        alloc::vec![
            C64::new(a / norm, 0.0),
            z,
            z,
            C64::new(core::f64::consts::FRAC_1_SQRT_2 / norm, 0.0),
        ],
    )
}

/// `(a, 0, 0, 0, 1/√3, 0, 0, 0, 1/√3)ᵀ / √(a² + 2/3)`.
pub fn pure_family_3x3(a: f64) -> Result<StateVector> {
    check_nonnegative("a", a)?;
    let norm = Float::sqrt(a * a + 2.0 / 3.0);
    let third = 1.0 / Float::sqrt(3.0) / norm;
    let mut amps = alloc::vec![C64::new(0.0, 0.0); 9];
    amps[0] = C64::new(a / norm, 0.0);
    amps[4] = C64::new(third, 0.0);
    amps[8] = C64::new(third, 0.0);
    StateVector::new(3, 3, amps)
}

/// `(x / d1d2) I + (1 - x) |ψ⟩⟨ψ|`.
pub fn isotropic_mix(x: f64, psi: &StateVector) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter {
            name: "x",
            value: x,
            reason: "noise weight must lie in [0, 1]",
        });
    }
    let n = psi.dim();
    let m = ComplexMatrix::identity(n, n).scale(x / n as f64) + psi.projector().scale(1.0 - x);
    Ok(DensityMatrix::new_unchecked(psi.d1(), psi.d2(), m))
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im)
}

/// Haar-uniform unit vector in `C^d`.
pub(crate) fn haar_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DVector<C64> {
    loop {
        let v = DVector::from_fn(d, |_, _| gaussian_complex(rng));
        let norm = v.norm();
        if norm > 1e-300 {
            return v.unscale(norm);
        }
    }
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// `diag(R)` moved into `Q`.
pub(crate) fn haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| gaussian_complex(rng));
    let qr = g.qr();
    let (mut q, r) = qr.unpack();
    for j in 0..d {
        let rjj = r[(j, j)];
        let n = rjj.norm();
        let phase = if n > 0.0 { rjj / n } else { C64::new(1.0, 0.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

pub(crate) fn product_pure_with<R: Rng + ?Sized>(d1: usize, d2: usize, rng: &mut R) -> StateVector {
    let a = haar_vector(d1, rng);
    let b = haar_vector(d2, rng);
    StateVector::from_unit_vector(d1, d2, a.kronecker(&b))
}

/// `|a⟩ ⊗ |b⟩` with both factors Haar-uniform.
pub fn random_product_pure(d1: usize, d2: usize, seed: u64) -> Result<StateVector> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    Ok(product_pure_with(d1, d2, &mut rng_from_seed(seed)))
}

/// Haar-uniform pure state on `C^d1 ⊗ C^d2` (generally entangled).
pub fn random_pure(d1: usize, d2: usize, seed: u64) -> Result<StateVector> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    let v = haar_vector(d1 * d2, &mut rng_from_seed(seed));
    Ok(StateVector::from_unit_vector(d1, d2, v))
}

/// `Σ_i p_i |a_i⟩⟨a_i| ⊗ |b_i⟩⟨b_i|` with `p ~ Dirichlet(1, …, 1)`.
pub fn random_separable_mixed(d1: usize, d2: usize, k: usize, seed: u64) -> Result<DensityMatrix> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    if k == 0 {
        return Err(Error::InvalidParameter {
            name: "k",
            value: 0.0,
            reason: "need at least one mixture component",
        });
    }
    let mut rng = rng_from_seed(seed);
    let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(&mut rng)).collect();
    let total: f64 = raw.iter().sum();
    let n = d1 * d2;
    let mut m = ComplexMatrix::zeros(n, n);
    for w in raw {
        let psi = product_pure_with(d1, d2, &mut rng);
        m += psi.projector().scale(w / total);
    }
    Ok(DensityMatrix::new_unchecked(d1, d2, m))
}

/// Haar-random `(U1, U2)` acting on subsystems A and B.
pub fn random_local_unitary_pair(
    d1: usize,
    d2: usize,
    seed: u64,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    let mut rng = rng_from_seed(seed);
    let u1 = haar_unitary(d1, &mut rng);
    let u2 = haar_unitary(d2, &mut rng);
    Ok((u1, u2))
}

/// Ginibre-ensemble state `G G† / tr(G G†)`.
pub fn random_density(d1: usize, d2: usize, seed: u64) -> Result<DensityMatrix> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    let n = d1 * d2;
    let mut rng = rng_from_seed(seed);
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian_complex(&mut rng));
    let gg = &g * g.adjoint();
    let tr = crate::linalg::trace(&gg).re;
    let mut m = gg.unscale(tr);
    // Exact Hermitian symmetry; the product is only Hermitian up to round-off.
    m = crate::linalg::hermitian_part(&m);
    Ok(DensityMatrix::new_unchecked(d1, d2, m))
}

/// Trace-one PSD operator with vanishing local Bloch vectors and a random
/// correlation matrix `R`, rescaled so that `‖R‖_HS = u / 2` with
/// `u ~ U(0, 1]`. `‖R‖_HS ≤ 1/2` keeps the operator positive semidefinite.
pub fn random_correlation_operator(d1: usize, d2: usize, seed: u64) -> Result<ComplexMatrix> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    let mut rng = rng_from_seed(seed);
    let (n1, n2) = (d1 * d1 - 1, d2 * d2 - 1);
    let r = RealMatrix::from_fn(n1, n2, |_, _| StandardNormal.sample(&mut rng));
    let u: f64 = 1.0 - rng.random::<f64>();
    let r = r.scale(u / (2.0 * r.norm()));
    let form = crate::linalg::BlochForm::correlation_only(d1, d2, r)?;
    Ok(crate::linalg::bloch_compose(&form))
}
