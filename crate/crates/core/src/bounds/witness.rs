use crate::linalg::{
    check_finite, check_hermitian, check_local_dim, check_square, min_eigenvalue, trace,
    trace_product, DensityMatrix,
};
use crate::{tol, ComplexMatrix, Error, Result};

/// `W = α(L) I - L` for a trace-one positive semidefinite `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessOperator {
    d1: usize,
    d2: usize,
    l: ComplexMatrix,
    alpha: f64,
    w: ComplexMatrix,
}

impl WitnessOperator {
    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    /// The test operator `L`.
    pub fn l(&self) -> &ComplexMatrix {
        &self.l
    }

    /// `tr(L)`; always 1 here.
    pub fn trace_target(&self) -> f64 {
        1.0
    }

    /// Separable maximum `α(L)` used as the offset.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The assembled witness `W`.
    pub fn w(&self) -> &ComplexMatrix {
        &self.w
    }
}

/// Membership of `L` in the set of trace-one positive semidefinite operators.
pub fn check_unit_trace_psd(l: &ComplexMatrix, d1: usize, d2: usize) -> Result<()> {
    check_local_dim(d1)?;
    check_local_dim(d2)?;
    check_square(l, d1 * d2)?;
    check_finite(l)?;
    check_hermitian(l)?;
    let tr = trace(l).re;
    if (tr - 1.0).abs() > tol::TRACE {
        return Err(Error::TraceMismatch {
            trace: tr,
            expected: 1.0,
        });
    }
    let min_eigenvalue = min_eigenvalue(l);
    if min_eigenvalue < -tol::PSD_SLACK {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(())
}

pub fn build_witness(
    l: ComplexMatrix,
    d1: usize,
    d2: usize,
    alpha: f64,
) -> Result<WitnessOperator> {
    check_unit_trace_psd(&l, d1, d2)?;
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "separable maximum of a PSD operator is finite and nonnegative",
        });
    }
    let n = d1 * d2;
    let w = ComplexMatrix::identity(n, n).scale(alpha) - &l;
    Ok(WitnessOperator {
        d1,
        d2,
        l,
        alpha,
        w,
    })
}

/// `-tr(W ρ)`: for the `L` inside `witness`, a lower bound on `C_w(ρ)`.
pub fn witness_expectation(witness: &WitnessOperator, rho: &DensityMatrix) -> Result<f64> {
    if (witness.d1, witness.d2) != (rho.d1(), rho.d2()) {
        return Err(Error::DimensionMismatch {
            expected: witness.d1 * witness.d2,
            found: rho.dim(),
        });
    }
    Ok(-trace_product(&witness.w, rho.matrix()).re)
}
