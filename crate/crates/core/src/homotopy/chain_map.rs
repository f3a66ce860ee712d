use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quivrep::ModuleMorphism;

use super::BoundedComplex;

/// A chain map, stored on the degrees where both source and target are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F: Field> {
    source: Arc<BoundedComplex<F>>,
    target: Arc<BoundedComplex<F>>,
    lo: i32,
    components: Vec<ModuleMorphism<F>>,
}

/// Degrees where both complexes have nonzero terms.
pub(crate) fn overlap<F: Field>(c: &BoundedComplex<F>, d: &BoundedComplex<F>) -> std::ops::RangeInclusive<i32> {
    if c.is_zero_complex() || d.is_zero_complex() {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    c.lo().max(d.lo())..=c.hi().min(d.hi())
}

impl<F: Field> ChainMap<F> {
    /// Builds the map from `component(i)` on the overlap degrees and checks the chain condition.
    pub fn from_fn(
        source: Arc<BoundedComplex<F>>,
        target: Arc<BoundedComplex<F>>,
        component: impl FnMut(i32) -> Result<ModuleMorphism<F>>,
    ) -> Result<Self> {
        let f = Self::from_fn_unchecked(source, target, component)?;
        f.check()?;
        Ok(f)
    }

    pub(crate) fn from_fn_unchecked(
        source: Arc<BoundedComplex<F>>,
        target: Arc<BoundedComplex<F>>,
        mut component: impl FnMut(i32) -> Result<ModuleMorphism<F>>,
    ) -> Result<Self> {
        if source.quiver() != target.quiver() {
            return Err(Error::QuiverMismatch);
        }
        let range = overlap(&source, &target);
        let lo = *range.start();
        let mut components = Vec::new();
        for i in range {
            let c = component(i)?;
            if **c.source() != **source.term(i) || **c.target() != **target.term(i) {
                return Err(Error::DimensionMismatch(format!("component in degree {i} has the wrong endpoints")));
            }
            components.push(c);
        }
        Ok(ChainMap {
            source,
            target,
            lo,
            components,
        })
    }

    fn check(&self) -> Result<()> {
        let (c, d) = (&self.source, &self.target);
        if c.is_zero_complex() || d.is_zero_complex() {
            return Ok(());
        }
        for i in c.lo().max(d.lo() - 1)..=c.hi().min(d.hi() - 1) {
            let nv = c.quiver().vertex_count();
            for v in 0..nv {
                let lhs = &d.differential_at(i, v) * self.component_at(i, v).as_ref();
                let rhs = self.component_at(i + 1, v).as_ref() * &c.differential_at(i, v);
                if lhs != rhs {
                    return Err(Error::NotAChainMap(i));
                }
            }
        }
        Ok(())
    }

    pub fn is_chain_map(&self) -> bool {
        self.check().is_ok()
    }

    pub fn identity(c: &Arc<BoundedComplex<F>>) -> Self {
        Self::from_fn_unchecked(c.clone(), c.clone(), |i| Ok(ModuleMorphism::identity(c.term(i)))).expect("identity")
    }

    pub fn zero(source: &Arc<BoundedComplex<F>>, target: &Arc<BoundedComplex<F>>) -> Self {
        Self::from_fn_unchecked(source.clone(), target.clone(), |i| {
            Ok(ModuleMorphism::zero(source.term(i), target.term(i)))
        })
        .expect("zero map")
    }

    pub fn source(&self) -> &Arc<BoundedComplex<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<BoundedComplex<F>> {
        &self.target
    }

    pub fn field(&self) -> F {
        self.source.field()
    }

    pub fn component(&self, i: i32) -> ModuleMorphism<F> {
        match self.stored(i) {
            Some(c) => c.clone(),
            None => ModuleMorphism::zero(self.source.term(i), self.target.term(i)),
        }
    }

    pub(crate) fn stored(&self, i: i32) -> Option<&ModuleMorphism<F>> {
        let k = i - self.lo;
        if k < 0 || k as usize >= self.components.len() {
            None
        } else {
            Some(&self.components[k as usize])
        }
    }

    pub(crate) fn component_at(&self, i: i32, v: usize) -> std::borrow::Cow<'_, crate::exactlin::Matrix<F>> {
        match self.stored(i) {
            Some(c) => std::borrow::Cow::Borrowed(c.map(v)),
            None => std::borrow::Cow::Owned(crate::exactlin::Matrix::zeros(
                self.field(),
                self.target.term(i).dim(v),
                self.source.term(i).dim(v),
            )),
        }
    }

    /// `(lo, components)` over the overlap degrees.
    pub fn components(&self) -> (i32, &[ModuleMorphism<F>]) {
        (self.lo, &self.components)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ChainMap<F>) -> Result<ChainMap<F>> {
        if *inner.target != *self.source {
            return Err(Error::DimensionMismatch("composing chain maps through different complexes".into()));
        }
        Self::from_fn_unchecked(inner.source.clone(), self.target.clone(), |i| {
            self.component(i).compose(&inner.component(i))
        })
    }

    fn zip_with(
        &self,
        other: &ChainMap<F>,
        op: impl Fn(&ModuleMorphism<F>, &ModuleMorphism<F>) -> Result<ModuleMorphism<F>>,
    ) -> Result<ChainMap<F>> {
        if *self.source != *other.source || *self.target != *other.target {
            return Err(Error::DimensionMismatch("chain maps are not parallel".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| op(a, b))
            .collect::<Result<_>>()?;
        Ok(ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            lo: self.lo,
            components,
        })
    }

    pub fn add(&self, other: &ChainMap<F>) -> Result<ChainMap<F>> {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &ChainMap<F>) -> Result<ChainMap<F>> {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn scale(&self, c: &F::Elem) -> ChainMap<F> {
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            lo: self.lo,
            components: self.components.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> ChainMap<F> {
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            lo: self.lo,
            components: self.components.iter().map(|m| m.neg()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// `f[n]`, with the same components reindexed (no sign).
    pub fn shift(&self, n: i32) -> ChainMap<F> {
        let source = Arc::new(self.source.shift(n));
        let target = Arc::new(self.target.shift(n));
        Self::from_fn_unchecked(source, target, |i| Ok(self.component(i + n))).expect("shift preserves endpoints")
    }

    /// Replaces source and target by structurally equal complexes.
    pub fn with_endpoints(&self, source: Arc<BoundedComplex<F>>, target: Arc<BoundedComplex<F>>) -> Result<ChainMap<F>> {
        if *source != *self.source || *target != *self.target {
            return Err(Error::DimensionMismatch("replacement endpoints differ".into()));
        }
        Ok(ChainMap {
            source,
            target,
            lo: self.lo,
            components: self.components.clone(),
        })
    }
}
