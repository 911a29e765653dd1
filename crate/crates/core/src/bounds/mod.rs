//! Witness operators `W = α(L) I - L` and certified lower bounds on `C_w(ρ)`.
//!
//! Each lower bound is realized by an explicit trace-one operator `L`:
//! [`construct_l_pure`], [`construct_l_mixed`] and [`construct_l_qubit`]
//! return the witness whose violation `-tr(W ρ)` equals [`bound_pure`],
//! [`bound_mixed`] and [`bound_qubit`] respectively.

mod alpha;
mod construct;
mod lower;
mod report;
mod witness;

pub use alpha::{alpha_correlation, alpha_rank_one, alpha_variational, VariationalOptions};
pub use construct::{construct_l_mixed, construct_l_pure, construct_l_qubit};
pub use lower::{
    bound_mixed, bound_pure, bound_qubit, correlation_matrix, correlation_rank, det_sign,
};
pub use report::{evaluate, BoundReport};
pub use witness::{build_witness, check_unit_trace_psd, witness_expectation, WitnessOperator};
