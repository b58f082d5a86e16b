//! Exact computations with Frobenius algebras: dual bases, Nakayama
//! automorphisms, twisted centers and Higman-type ideals, and cellular
//! structure checks for algebras given by structure constants or by bound
//! quiver presentations.

pub mod algebra;
pub mod analysis;
pub mod cellular;
pub mod centers;
pub mod fixtures;
pub mod frobenius;
pub mod linalg;
pub mod presentation;
pub mod report;
pub mod scalar;
pub mod spec_file;

pub use algebra::{Algebra, AlgebraError, Element, LinearMap};
pub use linalg::{Matrix, Subspace};
pub use scalar::{Field, Scalar};
