//! Numerical tolerances shared by validation, bounds and the property suites.

/// Entrywise Hermiticity slack for density matrices and witness operators.
pub const HERMITIAN: f64 = 1e-10;

/// Slack on `tr(ρ) = 1` and `tr(L) = 1`.
pub const TRACE: f64 = 1e-10;

/// Most negative eigenvalue still accepted as positive semidefinite.
pub const PSD_SLACK: f64 = 1e-9;

/// Slack on the Euclidean norm of a pure state.
pub const STATE_NORM: f64 = 1e-12;

/// Local Bloch vectors below this (entrywise) count as zero.
pub const BLOCH_ZERO: f64 = 1e-10;

/// A correlation matrix with every entry below this is treated as zero.
pub const CORRELATION_ZERO: f64 = 1e-12;

/// Singular values below `RANK_RELATIVE * σ_max` do not count towards rank.
pub const RANK_RELATIVE: f64 = 1e-10;

/// `tr(ρ²)` above `1 - PURITY` certifies a pure state.
pub const PURITY: f64 = 1e-9;

/// A best bound above this certifies entanglement.
pub const VERDICT: f64 = 1e-9;
