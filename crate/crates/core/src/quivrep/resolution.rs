use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;

use super::{direct_sum, kernel_of, ModuleMorphism, Representation};

/// A projective cover `P → M`; `summands[i]` is the vertex of the i-th indecomposable summand of `P`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub cover: Arc<Representation<F>>,
    pub map: ModuleMorphism<F>,
    pub summands: Vec<usize>,
}

/// Vectors of `M_v` completing a basis of the radical to `M_v`: a basis of the top at `v`.
fn top_vectors<F: Field>(m: &Representation<F>, v: usize) -> Vec<Vec<F::Elem>> {
    let field = m.field();
    let rad = m.radical(v);
    rad.complement_indices()
        .into_iter()
        .map(|c| {
            let mut e = vec![field.zero(); m.dim(v)];
            e[c] = field.one();
            e
        })
        .collect()
}

pub fn projective_cover<F: Field>(m: &Arc<Representation<F>>) -> Result<ProjectiveCover<F>> {
    let q = m.quiver().clone();
    let field = m.field();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for v in 0..q.vertex_count() {
        for t in top_vectors(m, v) {
            summands.push(v);
            generators.push(t);
        }
    }
    if summands.is_empty() {
        let zero = Arc::new(Representation::zero(q, field));
        let map = ModuleMorphism::zero(&zero, m);
        return Ok(ProjectiveCover { cover: zero, map, summands });
    }
    let parts: Vec<Arc<Representation<F>>> = summands
        .iter()
        .map(|&v| Arc::new(Representation::projective(q.clone(), field, v)))
        .collect();
    let sum = direct_sum(&parts)?;
    // P(v) → M sends the path p to M_p(t)
    let maps = (0..q.vertex_count())
        .map(|w| {
            let mut columns = Vec::new();
            for (&v, t) in summands.iter().zip(&generators) {
                for p in &q.paths_by_end(v)[w] {
                    columns.push(m.path_map(p).apply(t).expect("generator lives at the path start"));
                }
            }
            Matrix::from_columns(field, m.dim(w), &columns)
        })
        .collect::<Result<Vec<_>>>()?;
    let map = ModuleMorphism::new(sum.object.clone(), m.clone(), maps)?;
    Ok(ProjectiveCover {
        cover: sum.object,
        map,
        summands,
    })
}

pub fn is_projective<F: Field>(m: &Arc<Representation<F>>) -> Result<bool> {
    Ok(projective_cover(m)?.cover.total_dim() == m.total_dim())
}

/// `0 → P₁ → P₀ → M → 0` for a module over a hereditary path algebra.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution<F: Field> {
    pub module: Arc<Representation<F>>,
    pub p0: ProjectiveCover<F>,
    pub p1: Arc<Representation<F>>,
    pub p1_summands: Vec<usize>,
    /// `P₁ → P₀`, injective with cokernel `M`.
    pub differential: ModuleMorphism<F>,
}

pub fn projective_resolution<F: Field>(m: &Arc<Representation<F>>) -> Result<ProjectiveResolution<F>> {
    let p0 = projective_cover(m)?;
    let (kernel, inclusion) = kernel_of(&p0.map)?;
    let kc = projective_cover(&kernel)?;
    if !kc.map.is_isomorphism() {
        return Err(Error::Internal(
            "kernel of the projective cover is not projective; path algebra is not hereditary".into(),
        ));
    }
    let differential = inclusion.compose(&kc.map)?;
    Ok(ProjectiveResolution {
        module: m.clone(),
        p0,
        p1: kc.cover,
        p1_summands: kc.summands,
        differential,
    })
}
