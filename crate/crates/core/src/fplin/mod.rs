//! Dense linear algebra over prime fields.

pub mod echelon;
pub mod field;
pub mod matrix;
pub mod poly;

pub use echelon::{fixed_subspace, intersect, restrict_to_subspace, Echelon};
pub use matrix::{FpMatrix, Solver};
pub use poly::Poly;

use crate::error::Result;

/// Left kernel `{x : x * a = 0}` in reduced echelon form.
pub fn kernel_basis(a: &FpMatrix) -> FpMatrix {
    a.kernel_basis()
}

/// Row space of `a` in reduced echelon form.
pub fn image_basis(a: &FpMatrix) -> FpMatrix {
    a.image_basis()
}

pub fn rank(a: &FpMatrix) -> usize {
    a.rank()
}

/// Some `x` with `x * a = y`.
pub fn solve(a: &FpMatrix, y: &FpMatrix) -> Result<FpMatrix> {
    a.solve(y)
}

pub fn tensor(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    a.kron(b)
}
