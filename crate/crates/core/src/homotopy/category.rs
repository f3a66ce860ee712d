use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;

use super::{homotopy_hom, BoundedComplex, ChainMap, HomSemantics, HomotopyHomSpace};

/// `T[a][b]` = class coordinates of `rep_a(Y,Z) ∘ rep_b(X,Y)`.
#[derive(Clone, Debug)]
struct CompositionTensor<F: Field> {
    entries: Vec<Vec<Vec<F::Elem>>>,
}

/// A finite full subcategory of the homotopy category: a list of complexes,
/// every Hom space between them, and composition in class coordinates.
#[derive(Debug)]
pub struct FiniteSubcategory<F: Field> {
    field: F,
    objects: Vec<Arc<BoundedComplex<F>>>,
    semantics: HomSemantics,
    homs: Vec<Arc<HomotopyHomSpace<F>>>,
    tensors: Vec<OnceLock<Arc<CompositionTensor<F>>>>,
}

impl<F: Field> FiniteSubcategory<F> {
    pub fn new(field: F, objects: Vec<Arc<BoundedComplex<F>>>, semantics: HomSemantics) -> Result<Self> {
        let n = objects.len();
        let homs = (0..n * n)
            .into_par_iter()
            .map(|k| homotopy_hom(&objects[k / n], &objects[k % n], semantics).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;
        let tensors = (0..n * n * n).map(|_| OnceLock::new()).collect();
        Ok(FiniteSubcategory {
            field,
            objects,
            semantics,
            homs,
            tensors,
        })
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn semantics(&self) -> HomSemantics {
        self.semantics
    }

    pub fn objects(&self) -> &[Arc<BoundedComplex<F>>] {
        &self.objects
    }

    pub fn object(&self, x: usize) -> &Arc<BoundedComplex<F>> {
        &self.objects[x]
    }

    pub fn hom(&self, x: usize, y: usize) -> &Arc<HomotopyHomSpace<F>> {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom(x, y).dim()
    }

    fn tensor(&self, x: usize, y: usize, z: usize) -> &CompositionTensor<F> {
        let n = self.objects.len();
        self.tensors[(x * n + y) * n + z].get_or_init(|| {
            let (hxy, hyz, hxz) = (self.hom(x, y), self.hom(y, z), self.hom(x, z));
            let fs = hxy.basis();
            let gs = hyz.basis();
            let entries = gs
                .iter()
                .map(|g| {
                    fs.iter()
                        .map(|f| {
                            let gf = g.compose(f).expect("composable chain maps");
                            let gf = gf
                                .with_endpoints(hxz.source().clone(), hxz.target().clone())
                                .expect("same endpoints");
                            hxz.class_coords(&gf).expect("composite of chain maps")
                        })
                        .collect()
                })
                .collect();
            Arc::new(CompositionTensor { entries })
        })
    }

    /// Class of `g ∘ f` for `f ∈ Hom(x,y)`, `g ∈ Hom(y,z)`.
    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[F::Elem], f: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.field;
        let t = self.tensor(x, y, z);
        let mut out = vec![k.zero(); self.hom_dim(x, z)];
        for (a, ga) in g.iter().enumerate() {
            if k.is_zero(ga) {
                continue;
            }
            for (b, fb) in f.iter().enumerate() {
                if k.is_zero(fb) {
                    continue;
                }
                let c = k.mul(ga, fb);
                for (o, e) in out.iter_mut().zip(&t.entries[a][b]) {
                    *o = k.add(o, &k.mul(&c, e));
                }
            }
        }
        out
    }

    /// Matrix of `g ↦ g ∘ f` from `Hom(y,z)` to `Hom(x,z)`.
    pub fn precompose_matrix(&self, x: usize, y: usize, z: usize, f: &[F::Elem]) -> Matrix<F> {
        let k = self.field;
        let cols: Vec<Vec<F::Elem>> = (0..self.hom_dim(y, z))
            .map(|a| self.compose(x, y, z, &unit(k, self.hom_dim(y, z), a), f))
            .collect();
        Matrix::from_columns(k, self.hom_dim(x, z), &cols).expect("column lengths")
    }

    /// Matrix of `f ↦ g ∘ f` from `Hom(x,y)` to `Hom(x,z)`.
    pub fn postcompose_matrix(&self, x: usize, y: usize, z: usize, g: &[F::Elem]) -> Matrix<F> {
        let k = self.field;
        let cols: Vec<Vec<F::Elem>> = (0..self.hom_dim(x, y))
            .map(|b| self.compose(x, y, z, g, &unit(k, self.hom_dim(x, y), b)))
            .collect();
        Matrix::from_columns(k, self.hom_dim(x, z), &cols).expect("column lengths")
    }

    pub fn identity(&self, x: usize) -> Vec<F::Elem> {
        let h = self.hom(x, x);
        h.class_coords(&ChainMap::identity(h.source())).expect("identity is a chain map")
    }

    pub fn is_zero_object(&self, x: usize) -> bool {
        self.hom_dim(x, x) == 0
    }

    /// Some `g ∈ Hom(y,x)` with `g ∘ f = 1_x`.
    pub fn left_inverse(&self, x: usize, y: usize, f: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let m = self.precompose_matrix(x, y, x, f);
        m.solve(&self.identity(x)).expect("shapes agree")
    }

    /// Some `g ∈ Hom(y,x)` with `f ∘ g = 1_y`.
    pub fn right_inverse(&self, x: usize, y: usize, f: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let m = self.postcompose_matrix(y, x, y, f);
        m.solve(&self.identity(y)).expect("shapes agree")
    }

    pub fn is_split_mono(&self, x: usize, y: usize, f: &[F::Elem]) -> bool {
        self.left_inverse(x, y, f).is_some()
    }

    pub fn is_split_epi(&self, x: usize, y: usize, f: &[F::Elem]) -> bool {
        self.right_inverse(x, y, f).is_some()
    }

    /// The two-sided inverse of `f`, if `f` is an isomorphism.
    pub fn inverse(&self, x: usize, y: usize, f: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let g = self.left_inverse(x, y, f)?;
        let fg = self.compose(y, x, y, f, &g);
        (fg == self.identity(y)).then_some(g)
    }

    pub fn is_iso(&self, x: usize, y: usize, f: &[F::Elem]) -> bool {
        self.inverse(x, y, f).is_some()
    }

    /// Index of an object structurally equal to `c`.
    pub fn find(&self, c: &BoundedComplex<F>) -> Option<usize> {
        self.objects.iter().position(|o| **o == *c)
    }

    pub fn class_of(&self, x: usize, y: usize, f: &ChainMap<F>) -> Result<Vec<F::Elem>> {
        let h = self.hom(x, y);
        let f = f
            .with_endpoints(h.source().clone(), h.target().clone())
            .map_err(|_| Error::DimensionMismatch(format!("chain map is not a morphism between objects {x} and {y}")))?;
        h.class_coords(&f)
    }
}

pub(crate) fn unit<F: Field>(k: F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut e = vec![k.zero(); n];
    e[i] = k.one();
    e
}

/// Runs a test on the two-object subcategory `{source, target}` of `f`.
fn on_pair<F: Field, T>(
    f: &ChainMap<F>,
    semantics: HomSemantics,
    test: impl FnOnce(&FiniteSubcategory<F>, &[F::Elem]) -> T,
) -> Result<T> {
    let cat = FiniteSubcategory::new(f.field(), vec![f.source().clone(), f.target().clone()], semantics)?;
    let c = cat.class_of(0, 1, f)?;
    Ok(test(&cat, &c))
}

pub fn is_split_mono<F: Field>(f: &ChainMap<F>, semantics: HomSemantics) -> Result<bool> {
    on_pair(f, semantics, |cat, c| cat.is_split_mono(0, 1, c))
}

pub fn is_split_epi<F: Field>(f: &ChainMap<F>, semantics: HomSemantics) -> Result<bool> {
    on_pair(f, semantics, |cat, c| cat.is_split_epi(0, 1, c))
}

pub fn is_homotopy_equivalence<F: Field>(f: &ChainMap<F>, semantics: HomSemantics) -> Result<bool> {
    on_pair(f, semantics, |cat, c| cat.is_iso(0, 1, c))
}

pub fn is_null_homotopic<F: Field>(f: &ChainMap<F>) -> Result<bool> {
    homotopy_hom(f.source(), f.target(), HomSemantics::Homotopy)?.is_null_homotopic(f)
}

/// `C ≅ 0` iff the identity of `C` is null-homotopic.
pub fn is_zero_object<F: Field>(c: &Arc<BoundedComplex<F>>) -> Result<bool> {
    is_null_homotopic(&ChainMap::identity(c))
}
