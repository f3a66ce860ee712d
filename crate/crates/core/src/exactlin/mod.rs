//! Exact linear algebra over ℚ and GF(p).
//!
//! Everything here is a pure function of immutable inputs; no floating point
//! is involved anywhere, so equality of subspaces is decided exactly.

mod fitting;
mod frame;
mod matrix;
mod subspace;

pub use fitting::{fitting_decomposition, FittingSplit};
pub use frame::Frame;
pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::error::Result;
use crate::field::Field;

/// Some `x` with `a·x = b`, or `None` if the system is inconsistent.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    a.solve(b)
}

pub fn kernel_basis<F: Field>(a: &Matrix<F>) -> Subspace<F> {
    a.kernel_basis()
}

pub fn image_basis<F: Field>(a: &Matrix<F>) -> Subspace<F> {
    a.image_basis()
}

pub fn subspace_equal<F: Field>(s: &Subspace<F>, t: &Subspace<F>) -> Result<bool> {
    s.equals(t)
}

pub fn subspace_member<F: Field>(v: &[F::Elem], s: &Subspace<F>) -> Result<bool> {
    s.contains(v)
}
