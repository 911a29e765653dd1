use crate::linalg::{top_eigenpair, DensityMatrix, StateVector};
use crate::tol;

use super::{bound_mixed, bound_pure, bound_qubit};

/// Every applicable lower bound on `C_w(ρ)` for one state.
///
/// Raw values are kept unclamped (a negative `bound_mixed` is informative);
/// `best` is the largest of them, floored at the trivial bound 0.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub d1: usize,
    pub d2: usize,
    pub purity: f64,
    /// Present iff `tr(ρ²) > 1 - 1e-9`.
    pub bound_pure: Option<f64>,
    pub bound_mixed: f64,
    /// Present iff `d1 = d2 = 2`.
    pub bound_qubit: Option<f64>,
    pub best: f64,
    /// `best > 1e-9`.
    pub entangled: bool,
}

pub fn evaluate(rho: &DensityMatrix) -> BoundReport {
    let purity = rho.purity();
    let bound_pure = (purity > 1.0 - tol::PURITY).then(|| {
        let (_, v) = top_eigenpair(rho.matrix());
        bound_pure(&StateVector::from_unit_vector(rho.d1(), rho.d2(), v))
    });
    let bound_mixed = bound_mixed(rho);
    let bound_qubit = bound_qubit(rho).ok();
    let best = [bound_pure, Some(bound_mixed), bound_qubit]
        .into_iter()
        .flatten()
        .fold(0.0f64, f64::max);
    BoundReport {
        d1: rho.d1(),
        d2: rho.d2(),
        purity,
        bound_pure,
        bound_mixed,
        bound_qubit,
        best,
        entangled: best > tol::VERDICT,
    }
}
