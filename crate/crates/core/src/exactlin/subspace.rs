use crate::error::{Error, Result};
use crate::field::Field;

use super::Matrix;

/// A linear subspace of `F^n`, stored as the nonzero rows of a reduced
/// row-echelon basis. Two subspaces are equal iff their stored bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient_dim: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient_dim: usize) -> Self {
        let id = Matrix::identity(field, ambient_dim);
        Subspace {
            field,
            ambient_dim,
            basis: id.to_rows(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_spanning<I>(field: F, ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let vectors: Vec<Vec<F::Elem>> = vectors.into_iter().collect();
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::AmbientMismatch(v.len(), ambient_dim));
        }
        let m = Matrix::from_rows(field, ambient_dim, &vectors)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduced row-echelon basis vectors.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.field, self.ambient_dim, &self.basis).expect("basis vectors have ambient length")
    }

    /// The representative of `v + S` with zeros in every pivot coordinate.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check_len(v.len())?;
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = f.sub_mul(o, &c, r);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|x| self.field.is_zero(x)))
    }

    pub fn equals(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        Ok(self.basis == other.basis)
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_len(other.ambient_dim)?;
        Subspace::from_spanning(
            self.field,
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Coordinates not used as pivots; they index a basis of the quotient `F^n / S`.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// Matrix of the canonical projection `F^n -> F^n / S` in the complement coordinates.
    pub fn quotient_projection(&self) -> Matrix<F> {
        let f = self.field;
        let comp = self.complement_indices();
        let mut m = Matrix::zeros(f, comp.len(), self.ambient_dim);
        for (out_row, &c) in comp.iter().enumerate() {
            m.set(out_row, c, f.one());
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                m.set(out_row, p, f.neg(&row[c]));
            }
        }
        m
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::AmbientMismatch(n, self.ambient_dim));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn equality_is_canonical() {
        let a = Subspace::from_spanning(Rationals, 3, vec![q(&[1, 1, 0]), q(&[0, 1, 1])]).unwrap();
        let b = Subspace::from_spanning(Rationals, 3, vec![q(&[1, 2, 1]), q(&[1, 0, -1])]).unwrap();
        assert!(a.equals(&b).unwrap());
        let x = Subspace::from_spanning(Rationals, 2, vec![q(&[1, 0])]).unwrap();
        let y = Subspace::from_spanning(Rationals, 2, vec![q(&[0, 1])]).unwrap();
        assert!(!x.equals(&y).unwrap());
        assert!(matches!(a.equals(&x), Err(Error::AmbientMismatch(2, 3))));
    }

    #[test]
    fn membership() {
        let s = Subspace::from_spanning(Rationals, 3, vec![q(&[1, 1, 0])]).unwrap();
        assert!(s.contains(&q(&[0, 0, 0])).unwrap());
        assert!(s.contains(&q(&[2, 2, 0])).unwrap());
        assert!(!s.contains(&q(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let s = Subspace::from_spanning(Rationals, 3, vec![q(&[1, 2, 3])]).unwrap();
        let p = s.quotient_projection();
        assert_eq!(p.shape(), (2, 3));
        assert!(p.apply(&q(&[2, 4, 6])).unwrap().iter().all(|x| x == &Rationals.zero()));
        assert_eq!(p.rank(), 2);
    }
}
