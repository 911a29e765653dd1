use alloc::vec::Vec;
use nalgebra::{ComplexField, DMatrix};
use num_traits::Float;

/// Singular values in nonincreasing order. SVD backs all three norms.
pub fn singular_values<T>(m: &DMatrix<T>) -> Vec<f64>
where
    T: ComplexField<RealField = f64>,
{
    if m.is_empty() {
        return Vec::new();
    }
    let mut values: Vec<f64> = m
        .clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// `‖M‖_KF = tr √(M M†)`, the sum of singular values.
pub fn trace_norm<T>(m: &DMatrix<T>) -> f64
where
    T: ComplexField<RealField = f64>,
{
    singular_values(m).iter().sum()
}

/// `‖M‖_HS = √tr(M M†)`.
pub fn frobenius_norm<T>(m: &DMatrix<T>) -> f64
where
    T: ComplexField<RealField = f64>,
{
    Float::sqrt(singular_values(m).iter().map(|s| s * s).sum::<f64>())
}

/// `‖M‖₂ = σ_max(M)`.
pub fn spectral_norm<T>(m: &DMatrix<T>) -> f64
where
    T: ComplexField<RealField = f64>,
{
    singular_values(m).first().copied().unwrap_or(0.0)
}
