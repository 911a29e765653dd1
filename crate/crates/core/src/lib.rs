//! Optimal entanglement witnesses and certified lower bounds on the
//! witness-based entanglement measure `C_w` of bipartite states.
//!
//! The measure is `C_w(ρ) = max_L { -tr(W ρ) }` with `W = α(L) I - L`,
//! where `L` ranges over trace-one positive semidefinite operators and
//! `α(L)` is the largest expectation of `L` over product pure states.
//! Evaluating `C_w` exactly is a global optimization; this crate provides
//! the closed-form pieces that make it tractable from below:
//!
//! * [`linalg`]: Gell-Mann bases, Bloch decomposition, partial transpose,
//!   realignment, Schmidt coefficients and matrix norms.
//! * [`states`]: the parametrized state families and seeded random
//!   generators (Haar, Ginibre, separable mixtures).
//! * [`bounds`]: `α(L)` closed forms, a variational `α` oracle, witness
//!   assembly, the pure / mixed / two-qubit lower bounds and the explicit
//!   operators that attain them.
//!
//! The crate is `no_std` and only needs an allocator.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
mod error;
pub mod linalg;
pub mod states;
pub mod tol;

pub use error::{Error, Result};

pub use num_complex::Complex;

/// Complex scalar used throughout.
pub type C64 = Complex<f64>;
/// Dense complex matrix.
pub type ComplexMatrix = nalgebra::DMatrix<C64>;
/// Dense real matrix (correlation matrices, orthogonal factors).
pub type RealMatrix = nalgebra::DMatrix<f64>;
