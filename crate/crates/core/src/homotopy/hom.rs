use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Frame, Matrix, Subspace};
use crate::field::Field;
use crate::quivrep::{hom_space, HomSpace, ModuleMorphism};

use super::chain_map::overlap;
use super::{BoundedComplex, ChainMap};

/// How Hom spaces between complexes are to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomSemantics {
    /// Plain homotopy category of complexes.
    Homotopy,
    /// Derived category; valid only for complexes of projectives or over a quiver without arrows.
    Derived,
}

/// Chain maps `C → D` modulo null-homotopic maps.
///
/// Coordinates: a chain map is a vector in `⊕_i Hom(C^i, D^i)` using the
/// module Hom bases of each degree. Classes are coordinates against a fixed
/// set of representatives completing a basis of the null-homotopic maps to
/// a basis of all chain maps.
#[derive(Clone, Debug)]
pub struct HomotopyHomSpace<F: Field> {
    source: Arc<BoundedComplex<F>>,
    target: Arc<BoundedComplex<F>>,
    semantics: HomSemantics,
    degrees: Vec<i32>,
    homs: Vec<HomSpace<F>>,
    offsets: Vec<usize>,
    coord_dim: usize,
    chain: Subspace<F>,
    null: Subspace<F>,
    reps: Vec<Vec<F::Elem>>,
    frame: Frame<F>,
}

pub fn check_semantics<F: Field>(c: &BoundedComplex<F>, semantics: HomSemantics) -> Result<()> {
    if semantics == HomSemantics::Derived && !c.quiver().is_semisimple() && !c.has_projective_terms()? {
        return Err(Error::DerivedSemantics(
            "derived Hom needs complexes of projectives or a quiver without arrows".into(),
        ));
    }
    Ok(())
}

pub fn homotopy_hom<F: Field>(
    c: &Arc<BoundedComplex<F>>,
    d: &Arc<BoundedComplex<F>>,
    semantics: HomSemantics,
) -> Result<HomotopyHomSpace<F>> {
    if c.quiver() != d.quiver() {
        return Err(Error::QuiverMismatch);
    }
    check_semantics(c, semantics)?;
    check_semantics(d, semantics)?;
    let field = c.field();
    let degrees: Vec<i32> = overlap(c, d).collect();
    let homs: Vec<HomSpace<F>> = degrees
        .iter()
        .map(|&i| hom_space(c.term(i), d.term(i)))
        .collect::<Result<_>>()?;
    let mut offsets = Vec::with_capacity(degrees.len());
    let mut coord_dim = 0;
    for h in &homs {
        offsets.push(coord_dim);
        coord_dim += h.dim();
    }
    let slot = |i: i32| -> Option<usize> { degrees.iter().position(|&x| x == i) };

    // Chain condition d_D f^i - f^{i+1} d_C, as raw morphism vectors C^i → D^{i+1}.
    let mut cond_offsets = std::collections::HashMap::new();
    let mut n_rows = 0;
    if !c.is_zero_complex() && !d.is_zero_complex() {
        for i in c.lo().max(d.lo() - 1)..=c.hi().min(d.hi() - 1) {
            cond_offsets.insert(i, n_rows);
            n_rows += ModuleMorphism::vector_len(c.term(i), d.term(i + 1));
        }
    }
    let mut columns: Vec<Vec<F::Elem>> = Vec::with_capacity(coord_dim);
    for (k, &j) in degrees.iter().enumerate() {
        for b in homs[k].basis() {
            let mut col = vec![field.zero(); n_rows];
            if let Some(&off) = cond_offsets.get(&j) {
                let img = d.differential(j).compose(b)?.to_vector();
                for (t, x) in img.into_iter().enumerate() {
                    col[off + t] = field.add(&col[off + t], &x);
                }
            }
            if let Some(&off) = cond_offsets.get(&(j - 1)) {
                let img = b.compose(&c.differential(j - 1))?.to_vector();
                for (t, x) in img.into_iter().enumerate() {
                    col[off + t] = field.sub(&col[off + t], &x);
                }
            }
            columns.push(col);
        }
    }
    let cond = Matrix::from_columns(field, n_rows, &columns)?;
    let chain = cond.kernel_basis();

    // Null-homotopic maps d_D h^i + h^{i+1} d_C for h^i: C^i → D^{i-1}.
    let mut null_vectors = Vec::new();
    if !c.is_zero_complex() && !d.is_zero_complex() {
        for j in c.lo().max(d.lo() + 1)..=c.hi().min(d.hi() + 1) {
            let g = hom_space(c.term(j), d.term(j - 1))?;
            for h in g.basis() {
                let mut v = vec![field.zero(); coord_dim];
                if let Some(k) = slot(j) {
                    let f = d.differential(j - 1).compose(h)?;
                    for (t, x) in homs[k].coords(&f).into_iter().enumerate() {
                        v[offsets[k] + t] = field.add(&v[offsets[k] + t], &x);
                    }
                }
                if let Some(k) = slot(j - 1) {
                    let f = h.compose(&c.differential(j - 1))?;
                    for (t, x) in homs[k].coords(&f).into_iter().enumerate() {
                        v[offsets[k] + t] = field.add(&v[offsets[k] + t], &x);
                    }
                }
                null_vectors.push(v);
            }
        }
    }
    let null = Subspace::from_spanning(field, coord_dim, null_vectors)?;
    if !null.is_subspace_of(&chain)? {
        return Err(Error::Internal("null-homotopic maps are not chain maps".into()));
    }
    let mut span = null.clone();
    let mut reps = Vec::new();
    for z in chain.basis() {
        if !span.contains(z)? {
            reps.push(z.clone());
            span = span.sum(&Subspace::from_spanning(field, coord_dim, [z.clone()])?)?;
        }
    }
    let mut frame_cols: Vec<Vec<F::Elem>> = null.basis().to_vec();
    frame_cols.extend(reps.iter().cloned());
    let frame = Frame::from_columns(field, coord_dim, &frame_cols)?;
    Ok(HomotopyHomSpace {
        source: c.clone(),
        target: d.clone(),
        semantics,
        degrees,
        homs,
        offsets,
        coord_dim,
        chain,
        null,
        reps,
        frame,
    })
}

impl<F: Field> HomotopyHomSpace<F> {
    pub fn source(&self) -> &Arc<BoundedComplex<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<BoundedComplex<F>> {
        &self.target
    }

    pub fn semantics(&self) -> HomSemantics {
        self.semantics
    }

    pub fn field(&self) -> F {
        self.source.field()
    }

    /// Dimension of the space of homotopy classes.
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn chain_dim(&self) -> usize {
        self.chain.dim()
    }

    pub fn null_dim(&self) -> usize {
        self.null.dim()
    }

    pub fn coord_dim(&self) -> usize {
        self.coord_dim
    }

    pub fn chain_maps(&self) -> &Subspace<F> {
        &self.chain
    }

    pub fn null_homotopic(&self) -> &Subspace<F> {
        &self.null
    }

    /// Coordinates of a chain map in `⊕_i Hom(C^i, D^i)`.
    pub fn vector_of(&self, f: &ChainMap<F>) -> Result<Vec<F::Elem>> {
        if **f.source() != *self.source || **f.target() != *self.target {
            return Err(Error::DimensionMismatch("chain map does not belong to this Hom space".into()));
        }
        let field = self.field();
        let mut v = vec![field.zero(); self.coord_dim];
        for (k, &i) in self.degrees.iter().enumerate() {
            if let Some(c) = f.stored(i) {
                for (t, x) in self.homs[k].coords(c).into_iter().enumerate() {
                    v[self.offsets[k] + t] = x;
                }
            }
        }
        Ok(v)
    }

    pub fn chain_map_of_vector(&self, v: &[F::Elem]) -> ChainMap<F> {
        ChainMap::from_fn_unchecked(self.source.clone(), self.target.clone(), |i| {
            let k = self.degrees.iter().position(|&x| x == i).expect("overlap degree");
            let h = &self.homs[k];
            Ok(h.combine(&v[self.offsets[k]..self.offsets[k] + h.dim()]))
        })
        .expect("degrees match")
    }

    /// Class coordinates of a chain-map vector.
    pub fn class_of_vector(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.frame.coords(v).split_off(self.null.dim())
    }

    /// Class coordinates of a chain map.
    pub fn class_coords(&self, f: &ChainMap<F>) -> Result<Vec<F::Elem>> {
        let v = self.vector_of(f)?;
        if !self.chain.contains(&v)? {
            return Err(Error::Precondition("not a chain map".into()));
        }
        Ok(self.class_of_vector(&v))
    }

    /// Chain-map vector of the class representative with the given coordinates.
    pub fn representative_vector(&self, coeffs: &[F::Elem]) -> Vec<F::Elem> {
        let field = self.field();
        let mut v = vec![field.zero(); self.coord_dim];
        for (r, c) in self.reps.iter().zip(coeffs) {
            if field.is_zero(c) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(r) {
                *x = field.add(x, &field.mul(c, y));
            }
        }
        v
    }

    pub fn representative(&self, coeffs: &[F::Elem]) -> ChainMap<F> {
        self.chain_map_of_vector(&self.representative_vector(coeffs))
    }

    /// Representatives of the class basis.
    pub fn basis(&self) -> Vec<ChainMap<F>> {
        let field = self.field();
        (0..self.dim())
            .map(|k| {
                let mut e = vec![field.zero(); self.dim()];
                e[k] = field.one();
                self.representative(&e)
            })
            .collect()
    }

    pub fn is_null_homotopic(&self, f: &ChainMap<F>) -> Result<bool> {
        self.null.contains(&self.vector_of(f)?)
    }
}
