//! Seeded generators for representations, complexes, chain maps and
//! Verdier-inverse instances.

use std::sync::Arc;

use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::homotopy::{complex_direct_sum, homotopy_hom, BoundedComplex, ChainMap, HomSemantics};
use crate::quivrep::{hom_space, ModuleMorphism, Quiver, Representation};
use crate::trifun::{MorphismCatalog, TriangleFunctorModel};

pub fn random_vector<F: Field>(field: F, n: usize, rng: &mut dyn RngCore) -> Vec<F::Elem> {
    (0..n).map(|_| field.random_elem(rng)).collect()
}

pub fn random_matrix<F: Field>(field: F, rows: usize, cols: usize, rng: &mut dyn RngCore) -> Matrix<F> {
    Matrix::new(field, rows, cols, random_vector(field, rows * cols, rng)).expect("shape")
}

/// Dimensions uniform in `0..=max_dim` per vertex, arrow maps uniform.
pub fn random_representation<F: Field>(
    q: &Arc<Quiver>,
    field: F,
    max_dim: usize,
    rng: &mut dyn RngCore,
) -> Representation<F> {
    let dims: Vec<usize> = (0..q.vertex_count()).map(|_| rng.random_range(0..=max_dim)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| random_matrix(field, dims[a.target], dims[a.source], rng))
        .collect();
    Representation::new(q.clone(), field, dims, maps).expect("dimensions agree")
}

fn random_combination<F: Field>(field: F, basis: &[Vec<F::Elem>], len: usize, rng: &mut dyn RngCore) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); len];
    for b in basis {
        let c = field.random_elem(rng);
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = field.add(vi, &field.mul(&c, bi));
        }
    }
    v
}

/// A random intertwiner `m → n`.
pub fn random_module_morphism<F: Field>(
    m: &Arc<Representation<F>>,
    n: &Arc<Representation<F>>,
    rng: &mut dyn RngCore,
) -> Result<ModuleMorphism<F>> {
    let h = hom_space(m, n)?;
    let field = m.field();
    let coeffs = random_vector(field, h.dim(), rng);
    Ok(h.combine(&coeffs))
}

/// `terms` random terms starting in degree `lo`; each differential is a random
/// intertwiner killing the image of the previous one.
pub fn random_complex<F: Field>(
    q: &Arc<Quiver>,
    field: F,
    lo: i32,
    terms: usize,
    max_dim: usize,
    rng: &mut dyn RngCore,
) -> Result<BoundedComplex<F>> {
    let mods: Vec<Arc<Representation<F>>> =
        (0..terms).map(|_| Arc::new(random_representation(q, field, max_dim, rng))).collect();
    let mut diffs: Vec<ModuleMorphism<F>> = Vec::new();
    for k in 0..terms.saturating_sub(1) {
        let h = hom_space(&mods[k], &mods[k + 1])?;
        let d = match diffs.last() {
            None => h.combine(&random_vector(field, h.dim(), rng)),
            Some(prev) => {
                let len = ModuleMorphism::vector_len(prev.source(), &mods[k + 1]);
                let cols: Vec<Vec<F::Elem>> = h.basis().iter().map(|g| g.compose(prev).expect("composable").to_vector()).collect();
                let constraint = Matrix::from_columns(field, len, &cols)?;
                let ker = constraint.kernel_vectors();
                h.combine(&random_combination(field, &ker, h.dim(), rng))
            }
        };
        diffs.push(d);
    }
    BoundedComplex::new(q.clone(), field, lo, mods, diffs)
}

/// A random chain map `c → d`, not reduced modulo homotopy.
pub fn random_chain_map<F: Field>(
    c: &Arc<BoundedComplex<F>>,
    d: &Arc<BoundedComplex<F>>,
    rng: &mut dyn RngCore,
) -> Result<ChainMap<F>> {
    let h = homotopy_hom(c, d, HomSemantics::Homotopy)?;
    let v = random_combination(c.field(), h.chain_maps().basis(), h.coord_dim(), rng);
    Ok(h.chain_map_of_vector(&v))
}

/// `s = σ ∘ ι: X → X ⊕ K` with `ι` the split inclusion and `σ` a random
/// automorphism, in a two-object catalog `[X, X ⊕ K]`.
#[derive(Debug)]
pub struct VerdierInstance<F: Field> {
    pub catalog: Arc<MorphismCatalog<F>>,
    pub functor: TriangleFunctorModel<F>,
    pub s: Vec<F::Elem>,
}

/// Builds an instance from summands of `X` and of `K`; `functor` must kill `K`.
pub fn verdier_instance<F: Field>(
    field: F,
    x_parts: &[Arc<BoundedComplex<F>>],
    k_parts: &[Arc<BoundedComplex<F>>],
    functor: impl Fn(&Arc<MorphismCatalog<F>>) -> Result<TriangleFunctorModel<F>>,
    semantics: HomSemantics,
    rng: &mut dyn RngCore,
) -> Result<VerdierInstance<F>> {
    let x = complex_direct_sum(x_parts)?;
    let mut all = vec![x.object.clone()];
    all.extend(k_parts.iter().cloned());
    let xk = complex_direct_sum(&all)?;
    let catalog = Arc::new(MorphismCatalog::new(
        field,
        vec![("X".into(), x.object.clone()), ("X+K".into(), xk.object.clone())],
        semantics,
    )?);
    let functor = functor(&catalog)?;
    let cat = catalog.category();
    let iota = cat.class_of(0, 1, &xk.inclusions[0])?;
    for _ in 0..256 {
        let sigma = random_vector(field, cat.hom_dim(1, 1), rng);
        if cat.is_iso(1, 1, &sigma) {
            let s = cat.compose(0, 1, 1, &sigma, &iota);
            return Ok(VerdierInstance { catalog, functor, s });
        }
    }
    Err(Error::Internal("no automorphism found".into()))
}
