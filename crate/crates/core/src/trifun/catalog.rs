use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homotopy::{BoundedComplex, FiniteSubcategory, HomSemantics};

/// A finite list of named complexes with all Hom spaces between them.
#[derive(Debug)]
pub struct MorphismCatalog<F: Field> {
    names: Vec<String>,
    category: FiniteSubcategory<F>,
    shift_of: Vec<Option<usize>>,
    cone_closed: bool,
}

fn shifted_name(base: &str, n: i32) -> String {
    if n == 0 {
        base.to_string()
    } else {
        format!("{base}[{n}]")
    }
}

impl<F: Field> MorphismCatalog<F> {
    pub fn new(field: F, objects: Vec<(String, Arc<BoundedComplex<F>>)>, semantics: HomSemantics) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(objects.len());
        for (n, _) in &objects {
            if names.contains(n) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
            names.push(n.clone());
        }
        let complexes: Vec<_> = objects.into_iter().map(|(_, c)| c).collect();
        if complexes.iter().any(|c| **c.quiver() != **complexes[0].quiver()) {
            return Err(Error::QuiverMismatch);
        }
        let category = FiniteSubcategory::new(field, complexes, semantics)?;
        let shift_of = (0..category.len())
            .map(|x| category.find(&category.object(x).shift(1)))
            .collect();
        Ok(MorphismCatalog {
            names,
            category,
            shift_of,
            cone_closed: false,
        })
    }

    /// Every base object in every shift of `shifts`, named `X`, `X[1]`, ...
    pub fn with_shifts(
        field: F,
        base: Vec<(String, Arc<BoundedComplex<F>>)>,
        shifts: std::ops::RangeInclusive<i32>,
        semantics: HomSemantics,
    ) -> Result<Self> {
        let mut objects = Vec::new();
        for n in shifts {
            for (name, c) in &base {
                let c = if n == 0 { c.clone() } else { Arc::new(c.shift(n)) };
                objects.push((shifted_name(name, n), c));
            }
        }
        Self::new(field, objects, semantics)
    }

    /// Declares that cones of catalog morphisms decompose into shifts and
    /// sums of catalog objects; enables the cone-dependent implications.
    pub fn declare_cone_closed(mut self, closed: bool) -> Self {
        self.cone_closed = closed;
        self
    }

    pub fn is_cone_closed(&self) -> bool {
        self.cone_closed
    }

    pub fn category(&self) -> &FiniteSubcategory<F> {
        &self.category
    }

    pub fn field(&self) -> F {
        self.category.field()
    }

    pub fn semantics(&self) -> HomSemantics {
        self.category.semantics()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Precondition(format!("no catalog object named `{name}`")))
    }

    pub fn object(&self, x: usize) -> &Arc<BoundedComplex<F>> {
        self.category.object(x)
    }

    /// Index of `X[1]` when it is in the catalog.
    pub fn shift_of(&self, x: usize) -> Option<usize> {
        self.shift_of[x]
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.category.hom_dim(x, y)
    }

    /// All ordered pairs in catalog order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }
}
