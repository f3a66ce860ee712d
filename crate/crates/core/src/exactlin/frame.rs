use crate::error::{Error, Result};
use crate::field::Field;

use super::Matrix;

/// A linearly independent family of vectors together with a left inverse, so
/// that coordinates of vectors in their span can be read off by one product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame<F: Field> {
    vectors: Matrix<F>,
    rows: Vec<usize>,
    left_inverse: Matrix<F>,
}

impl<F: Field> Frame<F> {
    /// `vectors` holds the family as columns; fails when they are dependent.
    pub fn new(vectors: Matrix<F>) -> Result<Self> {
        let k = vectors.cols();
        let (_, rows) = vectors.transpose().rref();
        if rows.len() != k {
            return Err(Error::Precondition("frame vectors are linearly dependent".into()));
        }
        let left_inverse = vectors
            .select_rows(&rows)
            .inverse()
            .ok_or_else(|| Error::Internal("selected frame minor is singular".into()))?;
        Ok(Frame { vectors, rows, left_inverse })
    }

    pub fn from_columns(field: F, ambient_dim: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        Self::new(Matrix::from_columns(field, ambient_dim, columns)?)
    }

    pub fn dim(&self) -> usize {
        self.vectors.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.vectors.rows()
    }

    pub fn vectors(&self) -> &Matrix<F> {
        &self.vectors
    }

    /// Coordinates of `v`, assuming `v` lies in the span.
    pub fn coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let picked: Vec<F::Elem> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.left_inverse.apply(&picked).expect("frame minor is square")
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords_checked(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let c = self.coords(v);
        (self.combine(&c) == v).then_some(c)
    }

    pub fn combine(&self, coeffs: &[F::Elem]) -> Vec<F::Elem> {
        self.vectors.apply(coeffs).expect("coefficient count matches frame size")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn coordinates_recover_combination() {
        let f = PrimeField::new(5).unwrap();
        let frame = Frame::from_columns(f, 3, &[vec![1, 2, 0], vec![0, 1, 4]]).unwrap();
        let v = frame.combine(&[3, 2]);
        assert_eq!(frame.coords(&v), vec![3, 2]);
        assert_eq!(frame.coords_checked(&[1, 0, 0]), None);
        assert!(Frame::from_columns(f, 2, &[vec![1, 1], vec![2, 2]]).is_err());
    }
}
