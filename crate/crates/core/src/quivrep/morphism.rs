use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Frame, Matrix};
use crate::field::Field;

use super::Representation;

/// A tuple of vertex matrices intertwining the arrow maps of two representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism<F: Field> {
    source: Arc<Representation<F>>,
    target: Arc<Representation<F>>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMorphism<F> {
    pub fn new(source: Arc<Representation<F>>, target: Arc<Representation<F>>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if source.quiver() != target.quiver() {
            return Err(Error::QuiverMismatch);
        }
        let q = source.quiver();
        if maps.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex maps for {} vertices",
                maps.len(),
                q.vertex_count()
            )));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (target.dim(v), source.dim(v)) {
                return Err(Error::DimensionMismatch(format!(
                    "vertex `{}` carries a {:?} matrix, expected {:?}",
                    q.vertex_label(v),
                    m.shape(),
                    (target.dim(v), source.dim(v))
                )));
            }
        }
        let f = ModuleMorphism { source, target, maps };
        if let Some(a) = f.first_failing_arrow() {
            return Err(Error::NotIntertwining(f.source.quiver().arrow(a).label.clone()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Arc<Representation<F>>, target: Arc<Representation<F>>, maps: Vec<Matrix<F>>) -> Self {
        debug_assert_eq!(maps.len(), source.quiver().vertex_count());
        ModuleMorphism { source, target, maps }
    }

    fn first_failing_arrow(&self) -> Option<usize> {
        self.source.quiver().arrows().iter().enumerate().find_map(|(i, a)| {
            let lhs = self.target.map(i) * &self.maps[a.source];
            let rhs = &self.maps[a.target] * self.source.map(i);
            (lhs != rhs).then_some(i)
        })
    }

    pub fn is_intertwining(&self) -> bool {
        self.first_failing_arrow().is_none()
    }

    pub fn identity(m: &Arc<Representation<F>>) -> Self {
        let f = m.field();
        let maps = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMorphism::new_unchecked(m.clone(), m.clone(), maps)
    }

    pub fn zero(source: &Arc<Representation<F>>, target: &Arc<Representation<F>>) -> Self {
        let f = source.field();
        let maps = (0..source.dims().len())
            .map(|v| Matrix::zeros(f, target.dim(v), source.dim(v)))
            .collect();
        ModuleMorphism::new_unchecked(source.clone(), target.clone(), maps)
    }

    pub fn source(&self) -> &Arc<Representation<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation<F>> {
        &self.target
    }

    pub fn field(&self) -> F {
        self.source.field()
    }

    pub fn map(&self, v: usize) -> &Matrix<F> {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMorphism<F>) -> Result<ModuleMorphism<F>> {
        if !Representation::same_as(&inner.target, &self.source) {
            return Err(Error::DimensionMismatch("composing morphisms with mismatched middle object".into()));
        }
        let maps = self.maps.iter().zip(&inner.maps).map(|(g, f)| g * f).collect();
        Ok(ModuleMorphism::new_unchecked(inner.source.clone(), self.target.clone(), maps))
    }

    pub fn add(&self, other: &ModuleMorphism<F>) -> Result<ModuleMorphism<F>> {
        self.check_parallel(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a + b).collect();
        Ok(ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps))
    }

    pub fn sub(&self, other: &ModuleMorphism<F>) -> Result<ModuleMorphism<F>> {
        self.check_parallel(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a - b).collect();
        Ok(ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps))
    }

    pub fn scale(&self, c: &F::Elem) -> ModuleMorphism<F> {
        let maps = self.maps.iter().map(|m| m.scale(c)).collect();
        ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps)
    }

    pub fn neg(&self) -> ModuleMorphism<F> {
        let maps = self.maps.iter().map(|m| -m).collect();
        ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps)
    }

    fn check_parallel(&self, other: &ModuleMorphism<F>) -> Result<()> {
        if !Representation::same_as(&self.source, &other.source) || !Representation::same_as(&self.target, &other.target) {
            return Err(Error::DimensionMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && m.rank() == m.rows())
    }

    /// Concatenation of the vertex matrices, row-major, vertex by vertex.
    pub fn to_vector(&self) -> Vec<F::Elem> {
        self.maps.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub fn vector_len(source: &Representation<F>, target: &Representation<F>) -> usize {
        (0..source.dims().len()).map(|v| source.dim(v) * target.dim(v)).sum()
    }

    /// Inverse of [`to_vector`](Self::to_vector); does not check intertwining.
    pub fn from_vector(source: &Arc<Representation<F>>, target: &Arc<Representation<F>>, v: &[F::Elem]) -> Result<Self> {
        if v.len() != Self::vector_len(source, target) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a morphism space of length {}",
                v.len(),
                Self::vector_len(source, target)
            )));
        }
        let f = source.field();
        let mut offset = 0;
        let maps = (0..source.dims().len())
            .map(|vx| {
                let (r, c) = (target.dim(vx), source.dim(vx));
                let m = Matrix::new(f, r, c, v[offset..offset + r * c].to_vec()).expect("slice has r*c entries");
                offset += r * c;
                m
            })
            .collect();
        Ok(ModuleMorphism::new_unchecked(source.clone(), target.clone(), maps))
    }
}

/// `compose(g, f) = g ∘ f`.
pub fn compose<F: Field>(g: &ModuleMorphism<F>, f: &ModuleMorphism<F>) -> Result<ModuleMorphism<F>> {
    g.compose(f)
}

/// A basis of `Hom(M, N)` and a coordinate frame on it.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    source: Arc<Representation<F>>,
    target: Arc<Representation<F>>,
    basis: Vec<ModuleMorphism<F>>,
    frame: Frame<F>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModuleMorphism<F>] {
        &self.basis
    }

    pub fn source(&self) -> &Arc<Representation<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation<F>> {
        &self.target
    }

    /// Coordinates of a morphism `M → N` in the basis.
    pub fn coords(&self, f: &ModuleMorphism<F>) -> Vec<F::Elem> {
        self.frame.coords(&f.to_vector())
    }

    /// Coordinates of a vectorised morphism.
    pub fn coords_of_vector(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.frame.coords(v)
    }

    pub fn combine(&self, coeffs: &[F::Elem]) -> ModuleMorphism<F> {
        let v = self.frame.combine(coeffs);
        ModuleMorphism::from_vector(&self.source, &self.target, &v).expect("frame vectors have morphism length")
    }
}

/// Basis of the solution space of the commuting-square equations `N_a f_s = f_t M_a`.
pub fn hom_space<F: Field>(m: &Arc<Representation<F>>, n: &Arc<Representation<F>>) -> Result<HomSpace<F>> {
    if m.quiver() != n.quiver() {
        return Err(Error::QuiverMismatch);
    }
    let field = m.field();
    let q = m.quiver();
    let nv = q.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += n.dim(v) * m.dim(v);
    }
    let eq_rows: usize = q.arrows().iter().map(|a| n.dim(a.target) * m.dim(a.source)).sum();
    let mut system = Matrix::zeros(field, eq_rows, total);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (na, ma) = (n.map(ai), m.map(ai));
        for i in 0..n.dim(t) {
            for j in 0..m.dim(s) {
                // Σ_k N_a[i][k] f_s[k][j]
                for k in 0..n.dim(s) {
                    let c = na.get(i, k);
                    if !field.is_zero(c) {
                        let col = offsets[s] + k * m.dim(s) + j;
                        let x = field.add(system.get(row, col), c);
                        system.set(row, col, x);
                    }
                }
                // − Σ_k f_t[i][k] M_a[k][j]
                for k in 0..m.dim(t) {
                    let c = ma.get(k, j);
                    if !field.is_zero(c) {
                        let col = offsets[t] + i * m.dim(t) + k;
                        let x = field.sub(system.get(row, col), c);
                        system.set(row, col, x);
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = system.kernel_basis();
    let frame = Frame::from_columns(field, total, kernel.basis())?;
    let basis = kernel
        .basis()
        .iter()
        .map(|v| ModuleMorphism::from_vector(m, n, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        basis,
        frame,
    })
}
