use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

use super::{ModuleMorphism, Quiver, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactFunctorKind {
    /// Keep every vertex and the listed arrows (indices into the source quiver).
    ArrowRestriction(Vec<usize>),
    /// Keep the listed vertices and the arrows between them.
    VertexTruncation(Vec<usize>),
}

/// An exact functor between module categories of path algebras, given
/// structurally: restriction along a subset of arrows or a subset of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFunctorModel {
    kind: ExactFunctorKind,
    source: Arc<Quiver>,
    target: Arc<Quiver>,
    /// For each target vertex, the source vertex it comes from.
    vertex_origin: Vec<usize>,
    /// For each target arrow, the source arrow it comes from.
    arrow_origin: Vec<usize>,
}

impl ExactFunctorModel {
    pub fn arrow_restriction(source: &Arc<Quiver>, keep_arrows: &[&str]) -> Result<Self> {
        let mut kept: Vec<usize> = keep_arrows.iter().map(|l| source.arrow_index(l)).collect::<Result<_>>()?;
        kept.sort_unstable();
        kept.dedup();
        let target = if kept.len() == source.arrow_count() {
            source.clone()
        } else {
            let vertices: Vec<&str> = source.vertices().iter().map(String::as_str).collect();
            let arrows: Vec<(&str, &str, &str)> = kept
                .iter()
                .map(|&a| {
                    let arr = source.arrow(a);
                    (
                        arr.label.as_str(),
                        source.vertex_label(arr.source),
                        source.vertex_label(arr.target),
                    )
                })
                .collect();
            Arc::new(Quiver::new(&vertices, &arrows)?)
        };
        Ok(ExactFunctorModel {
            kind: ExactFunctorKind::ArrowRestriction(kept.clone()),
            vertex_origin: (0..source.vertex_count()).collect(),
            arrow_origin: kept,
            source: source.clone(),
            target,
        })
    }

    pub fn identity(source: &Arc<Quiver>) -> Self {
        let labels: Vec<&str> = source.arrows().iter().map(|a| a.label.as_str()).collect();
        Self::arrow_restriction(source, &labels).expect("all arrows exist")
    }

    pub fn vertex_truncation(source: &Arc<Quiver>, keep_vertices: &[&str]) -> Result<Self> {
        let mut kept: Vec<usize> = keep_vertices.iter().map(|l| source.vertex_index(l)).collect::<Result<_>>()?;
        kept.sort_unstable();
        kept.dedup();
        let arrow_origin: Vec<usize> = (0..source.arrow_count())
            .filter(|&a| {
                let arr = source.arrow(a);
                kept.contains(&arr.source) && kept.contains(&arr.target)
            })
            .collect();
        let vertices: Vec<&str> = kept.iter().map(|&v| source.vertex_label(v)).collect();
        let arrows: Vec<(&str, &str, &str)> = arrow_origin
            .iter()
            .map(|&a| {
                let arr = source.arrow(a);
                (
                    arr.label.as_str(),
                    source.vertex_label(arr.source),
                    source.vertex_label(arr.target),
                )
            })
            .collect();
        Ok(ExactFunctorModel {
            kind: ExactFunctorKind::VertexTruncation(kept.clone()),
            target: Arc::new(Quiver::new(&vertices, &arrows)?),
            source: source.clone(),
            vertex_origin: kept,
            arrow_origin,
        })
    }

    pub fn kind(&self) -> &ExactFunctorKind {
        &self.kind
    }

    pub fn source(&self) -> &Arc<Quiver> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Quiver> {
        &self.target
    }

    /// Whether a module supported on `dims` is sent to zero.
    pub fn kills_support(&self, dims: &[usize]) -> bool {
        self.vertex_origin.iter().all(|&v| dims[v] == 0)
    }

    pub fn apply_module<F: Field>(&self, m: &Representation<F>) -> Result<Representation<F>> {
        if **m.quiver() != *self.source {
            return Err(Error::QuiverMismatch);
        }
        let dims = self.vertex_origin.iter().map(|&v| m.dim(v)).collect();
        let maps = self.arrow_origin.iter().map(|&a| m.map(a).clone()).collect();
        Representation::new(self.target.clone(), m.field(), dims, maps)
    }

    /// Applies the functor to a morphism whose endpoints have already been mapped.
    pub fn apply_morphism_between<F: Field>(
        &self,
        f: &ModuleMorphism<F>,
        source: Arc<Representation<F>>,
        target: Arc<Representation<F>>,
    ) -> Result<ModuleMorphism<F>> {
        let maps = self.vertex_origin.iter().map(|&v| f.map(v).clone()).collect();
        ModuleMorphism::new(source, target, maps)
    }

    pub fn apply_morphism<F: Field>(&self, f: &ModuleMorphism<F>) -> Result<ModuleMorphism<F>> {
        let s = Arc::new(self.apply_module(f.source())?);
        let t = Arc::new(self.apply_module(f.target())?);
        self.apply_morphism_between(f, s, t)
    }
}

/// `apply_exact_functor` on objects.
pub fn apply_exact_functor<F: Field>(e: &ExactFunctorModel, m: &Representation<F>) -> Result<Representation<F>> {
    e.apply_module(m)
}
