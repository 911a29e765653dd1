//! IO side of `oew`: the state-file format, deterministic CSV sweeps over the
//! parametrized families, report rendering and the property self-test.

pub mod format;
pub mod selftest;
pub mod state_file;
pub mod sweep;
