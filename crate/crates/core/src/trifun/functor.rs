use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::homotopy::{BoundedComplex, ChainMap, FiniteSubcategory};
use crate::quivrep::{ExactFunctorModel, Quiver};

use super::MorphismCatalog;

/// What the functor does to complexes and chain maps outside the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainAction {
    Identity,
    /// Everything goes to the zero complex.
    Zero,
    /// Apply an exact module functor degree by degree.
    Termwise(ExactFunctorModel),
}

/// A triangle functor on a catalog: images of objects, linear maps between
/// class spaces, and `ξ_X: F(X[1]) → F(X)[1]` wherever `X[1]` is catalogued.
#[derive(Debug)]
pub struct TriangleFunctorModel<F: Field> {
    name: String,
    action: ChainAction,
    catalog: Arc<MorphismCatalog<F>>,
    target_quiver: Arc<Quiver>,
    target: FiniteSubcategory<F>,
    hom_maps: Vec<Matrix<F>>,
    xi: Vec<Option<Vec<F::Elem>>>,
}

impl<F: Field> TriangleFunctorModel<F> {
    pub fn identity(catalog: &Arc<MorphismCatalog<F>>) -> Result<Self> {
        Self::from_action("identity", ChainAction::Identity, catalog)
    }

    /// The functor to the zero category.
    pub fn zero(catalog: &Arc<MorphismCatalog<F>>) -> Result<Self> {
        Self::from_action("zero", ChainAction::Zero, catalog)
    }

    /// Applies `e` degree-wise; `ξ` is the identity.
    pub fn induce_termwise(e: &ExactFunctorModel, catalog: &Arc<MorphismCatalog<F>>) -> Result<Self> {
        let q = catalog.object(0).quiver();
        if **e.source() != **q {
            return Err(Error::QuiverMismatch);
        }
        Self::from_action("termwise", ChainAction::Termwise(e.clone()), catalog)
    }

    fn from_action(name: &str, action: ChainAction, catalog: &Arc<MorphismCatalog<F>>) -> Result<Self> {
        if catalog.is_empty() {
            return Err(Error::Precondition("empty catalog".into()));
        }
        let field = catalog.field();
        let source_quiver = catalog.object(0).quiver().clone();
        let target_quiver = match &action {
            ChainAction::Termwise(e) => e.target().clone(),
            _ => source_quiver,
        };
        let images = (0..catalog.len())
            .map(|x| apply_action(&action, &target_quiver, catalog.object(x)).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;
        let target = FiniteSubcategory::new(field, images, catalog.semantics())?;
        let n = catalog.len();
        let src = catalog.category();
        let hom_maps = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (x, y) = (k / n, k % n);
                let h = src.hom(x, y);
                let cols = h
                    .basis()
                    .iter()
                    .map(|f| {
                        let g = apply_action_map(&action, f, target.object(x), target.object(y))?;
                        target.hom(x, y).class_coords(&g)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_columns(field, target.hom_dim(x, y), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let xi = (0..n)
            .map(|x| {
                catalog.shift_of(x).map(|x1| {
                    debug_assert_eq!(**target.object(x1), target.object(x).shift(1));
                    target.identity(x1)
                })
            })
            .collect();
        Ok(TriangleFunctorModel {
            name: name.to_string(),
            action,
            catalog: catalog.clone(),
            target_quiver,
            target,
            hom_maps,
            xi,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn action(&self) -> &ChainAction {
        &self.action
    }

    pub fn catalog(&self) -> &Arc<MorphismCatalog<F>> {
        &self.catalog
    }

    pub fn source(&self) -> &FiniteSubcategory<F> {
        self.catalog.category()
    }

    /// The full subcategory on the images `F(X)`, indexed like the catalog.
    pub fn target(&self) -> &FiniteSubcategory<F> {
        &self.target
    }

    pub fn target_quiver(&self) -> &Arc<Quiver> {
        &self.target_quiver
    }

    pub fn field(&self) -> F {
        self.catalog.field()
    }

    pub fn hom_map(&self, x: usize, y: usize) -> &Matrix<F> {
        &self.hom_maps[x * self.catalog.len() + y]
    }

    /// `F(f)` in class coordinates.
    pub fn map_class(&self, x: usize, y: usize, f: &[F::Elem]) -> Vec<F::Elem> {
        self.hom_map(x, y).apply(f).expect("coordinate length")
    }

    /// `ξ_X` as an endomorphism class of `F(X[1]) = F(X)[1]`.
    pub fn xi(&self, x: usize) -> Option<&[F::Elem]> {
        self.xi[x].as_deref()
    }

    /// Replaces one Hom map; used to build negative controls.
    pub fn override_hom_map(&mut self, x: usize, y: usize, m: Matrix<F>) -> Result<()> {
        let shape = (self.target.hom_dim(x, y), self.catalog.hom_dim(x, y));
        if m.shape() != shape {
            return Err(Error::DimensionMismatch(format!("Hom map of shape {:?}, expected {shape:?}", m.shape())));
        }
        let n = self.catalog.len();
        self.hom_maps[x * n + y] = m;
        Ok(())
    }

    /// `F` on an arbitrary complex over the source quiver.
    pub fn apply_complex(&self, c: &BoundedComplex<F>) -> Result<BoundedComplex<F>> {
        apply_action(&self.action, &self.target_quiver, c)
    }

    /// `F(f): F(C) → F(D)` with the images supplied.
    pub fn apply_chain_map(
        &self,
        f: &ChainMap<F>,
        source: &Arc<BoundedComplex<F>>,
        target: &Arc<BoundedComplex<F>>,
    ) -> Result<ChainMap<F>> {
        apply_action_map(&self.action, f, source, target)
    }
}

fn apply_action<F: Field>(action: &ChainAction, target_quiver: &Arc<Quiver>, c: &BoundedComplex<F>) -> Result<BoundedComplex<F>> {
    match action {
        ChainAction::Identity => Ok(c.clone()),
        ChainAction::Zero => Ok(BoundedComplex::zero(target_quiver.clone(), c.field())),
        ChainAction::Termwise(e) => {
            let terms = c
                .terms()
                .iter()
                .map(|t| e.apply_module(t).map(Arc::new))
                .collect::<Result<Vec<_>>>()?;
            let diffs = (c.lo()..c.hi())
                .map(|i| {
                    let k = (i - c.lo()) as usize;
                    e.apply_morphism_between(&c.differential(i), terms[k].clone(), terms[k + 1].clone())
                })
                .collect::<Result<Vec<_>>>()?;
            BoundedComplex::new(target_quiver.clone(), c.field(), c.lo(), terms, diffs)
        }
    }
}

fn apply_action_map<F: Field>(
    action: &ChainAction,
    f: &ChainMap<F>,
    source: &Arc<BoundedComplex<F>>,
    target: &Arc<BoundedComplex<F>>,
) -> Result<ChainMap<F>> {
    match action {
        ChainAction::Identity => f.with_endpoints(source.clone(), target.clone()),
        ChainAction::Zero => Ok(ChainMap::zero(source, target)),
        ChainAction::Termwise(e) => ChainMap::from_fn(source.clone(), target.clone(), |i| {
            e.apply_morphism_between(&f.component(i), source.term(i).clone(), target.term(i).clone())
        }),
    }
}
