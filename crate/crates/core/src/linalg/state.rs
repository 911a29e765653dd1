use alloc::vec::Vec;
use nalgebra::DVector;

use super::{check_finite, check_hermitian, check_local_dim, check_square, min_eigenvalue, trace};
use crate::{tol, ComplexMatrix, Error, Result, C64};

/// Normalized amplitude vector of a bipartite pure state on `C^d1 ⊗ C^d2`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    d1: usize,
    d2: usize,
    amplitudes: DVector<C64>,
}

impl StateVector {
    pub fn new(d1: usize, d2: usize, amplitudes: impl Into<Vec<C64>>) -> Result<Self> {
        let amplitudes = Self::checked_amplitudes(d1, d2, amplitudes.into())?;
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > tol::STATE_NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { d1, d2, amplitudes })
    }

    /// Rescales `amplitudes` to unit norm.
    pub fn normalized(d1: usize, d2: usize, amplitudes: impl Into<Vec<C64>>) -> Result<Self> {
        let amplitudes = Self::checked_amplitudes(d1, d2, amplitudes.into())?;
        let norm = amplitudes.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self {
            d1,
            d2,
            amplitudes: amplitudes.unscale(norm),
        })
    }

    /// `|a⟩ ⊗ |b⟩`, each factor normalized first.
    pub fn product(a: &[C64], b: &[C64]) -> Result<Self> {
        let mut amps = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                amps.push(x * y);
            }
        }
        Self::normalized(a.len(), b.len(), amps)
    }

    fn checked_amplitudes(d1: usize, d2: usize, amplitudes: Vec<C64>) -> Result<DVector<C64>> {
        check_local_dim(d1)?;
        check_local_dim(d2)?;
        if amplitudes.len() != d1 * d2 {
            return Err(Error::DimensionMismatch {
                expected: d1 * d2,
                found: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(DVector::from_vec(amplitudes))
    }

    pub(crate) fn from_unit_vector(d1: usize, d2: usize, amplitudes: DVector<C64>) -> Self {
        debug_assert_eq!(amplitudes.len(), d1 * d2);
        Self { d1, d2, amplitudes }
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn dim(&self) -> usize {
        self.d1 * self.d2
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn projector(&self) -> ComplexMatrix {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            d1: self.d1,
            d2: self.d2,
            matrix: self.projector(),
        }
    }
}

/// Hermitian, unit-trace, positive semidefinite operator on `C^d1 ⊗ C^d2`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    d1: usize,
    d2: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates every invariant: shape, finiteness, Hermiticity (1e-10),
    /// unit trace (1e-10) and minimum eigenvalue ≥ -1e-9.
    pub fn new(d1: usize, d2: usize, matrix: ComplexMatrix) -> Result<Self> {
        check_local_dim(d1)?;
        check_local_dim(d2)?;
        check_square(&matrix, d1 * d2)?;
        check_finite(&matrix)?;
        check_hermitian(&matrix)?;
        let tr = trace(&matrix).re;
        if (tr - 1.0).abs() > tol::TRACE {
            return Err(Error::TraceMismatch {
                trace: tr,
                expected: 1.0,
            });
        }
        let min_eigenvalue = min_eigenvalue(&matrix);
        if min_eigenvalue < -tol::PSD_SLACK {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self { d1, d2, matrix })
    }

    /// Skips validation; callers guarantee the invariants by construction.
    pub(crate) fn new_unchecked(d1: usize, d2: usize, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.nrows(), d1 * d2);
        Self { d1, d2, matrix }
    }

    pub fn maximally_mixed(d1: usize, d2: usize) -> Result<Self> {
        check_local_dim(d1)?;
        check_local_dim(d2)?;
        let n = d1 * d2;
        Ok(Self::new_unchecked(
            d1,
            d2,
            ComplexMatrix::identity(n, n).unscale(n as f64),
        ))
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn dim(&self) -> usize {
        self.d1 * self.d2
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `(U1 ⊗ U2)† ρ (U1 ⊗ U2)`.
    pub fn conjugate_local(&self, u1: &ComplexMatrix, u2: &ComplexMatrix) -> Result<Self> {
        check_square(u1, self.d1)?;
        check_square(u2, self.d2)?;
        let u = u1.kronecker(u2);
        Ok(Self::new_unchecked(
            self.d1,
            self.d2,
            u.adjoint() * &self.matrix * u,
        ))
    }

    /// `λ ρ + (1 - λ) σ`.
    pub fn mix(&self, other: &Self, lambda: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                value: lambda,
                reason: "mixing weight must lie in [0, 1]",
            });
        }
        if (self.d1, self.d2) != (other.d1, other.d2) {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(Self::new_unchecked(
            self.d1,
            self.d2,
            self.matrix.scale(lambda) + other.matrix.scale(1.0 - lambda),
        ))
    }
}

impl From<&StateVector> for DensityMatrix {
    fn from(psi: &StateVector) -> Self {
        psi.to_density()
    }
}
