//! Exact dense linear algebra: RREF, inverses, kernels and subspaces.

mod matrix;
mod subspace;

pub use matrix::{solve_linear, LinearError, Matrix};
pub use subspace::Subspace;
