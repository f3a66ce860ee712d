use crate::error::{Error, Result};
use crate::field::Field;

use super::Matrix;

/// Decomposition `F^n = X' ⊕ X''` of an endomorphism `a` into an invertible
/// part on `X' = im a^n` and a nilpotent part on `X'' = ker a^n`.
///
/// The columns of `change_of_basis` are a basis of `X'` followed by a basis of
/// `X''`, so `P⁻¹·a·P = diag(a', a'')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingSplit<F: Field> {
    change_of_basis: Matrix<F>,
    inverse: Matrix<F>,
    conjugated: Matrix<F>,
    invertible_rank: usize,
}

impl<F: Field> FittingSplit<F> {
    pub fn change_of_basis(&self) -> &Matrix<F> {
        &self.change_of_basis
    }

    pub fn inverse_change_of_basis(&self) -> &Matrix<F> {
        &self.inverse
    }

    /// `P⁻¹·a·P`.
    pub fn conjugated(&self) -> &Matrix<F> {
        &self.conjugated
    }

    pub fn invertible_rank(&self) -> usize {
        self.invertible_rank
    }

    pub fn dim(&self) -> usize {
        self.conjugated.rows()
    }

    pub fn invertible_block(&self) -> Matrix<F> {
        let r = self.invertible_rank;
        self.conjugated.submatrix(0..r, 0..r)
    }

    pub fn nilpotent_block(&self) -> Matrix<F> {
        let (r, n) = (self.invertible_rank, self.dim());
        self.conjugated.submatrix(r..n, r..n)
    }

    /// Columns spanning `X'`.
    pub fn invertible_part_basis(&self) -> Matrix<F> {
        self.change_of_basis.submatrix(0..self.dim(), 0..self.invertible_rank)
    }

    /// Columns spanning `X''`.
    pub fn nilpotent_part_basis(&self) -> Matrix<F> {
        self.change_of_basis.submatrix(0..self.dim(), self.invertible_rank..self.dim())
    }

    /// Rows of `P⁻¹` giving the projection onto `X'` along `X''`.
    pub fn invertible_part_projection(&self) -> Matrix<F> {
        self.inverse.submatrix(0..self.invertible_rank, 0..self.dim())
    }

    pub fn nilpotent_part_projection(&self) -> Matrix<F> {
        self.inverse.submatrix(self.invertible_rank..self.dim(), 0..self.dim())
    }
}

/// Fitting decomposition of a square matrix via the stable power `a^m`,
/// stopping as soon as `rank a^m = rank a^{m+1}` (at the latest `m = n`).
pub fn fitting_decomposition<F: Field>(a: &Matrix<F>) -> Result<FittingSplit<F>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "Fitting decomposition of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let f = a.field();
    let n = a.rows();
    let mut stable = a.clone();
    let mut rank = stable.rank();
    for _ in 1..n.max(1) {
        let next = &stable * a;
        let next_rank = next.rank();
        stable = next;
        if next_rank == rank {
            break;
        }
        rank = next_rank;
    }
    let image = stable.image_basis();
    let kernel = stable.kernel_basis();
    let columns: Vec<Vec<F::Elem>> = image.basis().iter().chain(kernel.basis()).cloned().collect();
    let change_of_basis = Matrix::from_columns(f, n, &columns)?;
    let inverse = change_of_basis
        .inverse()
        .ok_or_else(|| Error::Internal("stable image and kernel do not span".into()))?;
    let conjugated = &(&inverse * a) * &change_of_basis;
    Ok(FittingSplit {
        change_of_basis,
        inverse,
        conjugated,
        invertible_rank: image.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Rationals};

    #[test]
    fn nilpotent_jordan_block() {
        let a = Matrix::from_i64(Rationals, &[&[0, 1], &[0, 0]]);
        assert_eq!(fitting_decomposition(&a).unwrap().invertible_rank(), 0);
    }

    #[test]
    fn identity_is_fully_invertible() {
        let a = Matrix::identity(Rationals, 4);
        let s = fitting_decomposition(&a).unwrap();
        assert_eq!(s.invertible_rank(), 4);
        assert!(s.invertible_block().is_identity());
    }

    #[test]
    fn diagonal_one_zero() {
        // rank(a) = rank(a^2) = 1
        let a = Matrix::from_i64(Rationals, &[&[1, 0], &[0, 0]]);
        let s = fitting_decomposition(&a).unwrap();
        assert_eq!(s.invertible_rank(), 1);
        assert_eq!(s.invertible_block(), Matrix::from_i64(Rationals, &[&[1]]));
        assert_eq!(s.nilpotent_block(), Matrix::from_i64(Rationals, &[&[0]]));
    }

    #[test]
    fn empty_and_non_square() {
        let s = fitting_decomposition(&Matrix::zeros(Rationals, 0, 0)).unwrap();
        assert_eq!(s.invertible_rank(), 0);
        assert!(fitting_decomposition(&Matrix::zeros(Rationals, 1, 2)).is_err());
    }

    #[test]
    fn mixed_block_recovers_matrix() {
        let q = Rationals;
        let a = Matrix::from_i64(q, &[&[2, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let s = fitting_decomposition(&a).unwrap();
        assert_eq!(s.invertible_rank(), 1);
        let back = &(s.change_of_basis() * s.conjugated()) * s.inverse_change_of_basis();
        assert_eq!(back, a);
        assert!(s.nilpotent_block().pow(2).unwrap().is_zero());
        assert!(!q.is_zero(s.invertible_block().get(0, 0)));
    }
}
