//! Exact computations with linear subspaces of matrices: canonical bases,
//! trace-pairing duality, tensor and product constructions, and k-transitivity
//! / k-separation verdicts that carry the field over which they are valid.

pub mod deciders;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod field;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod report;
pub mod subspace;

pub use error::{Error, Result};
pub use field::{Field, FieldTag, FiniteField, Fp, Fp2, Fp2Ctx, GaussRational, Rational};
pub use matrix::{FiniteMat, Mat};
pub use subspace::{FiniteSubspace, MatrixSubspace};
