//! Ready-made quivers, catalogs and functors for the A2 and A3 path algebras.

use std::sync::Arc;

use crate::error::Result;
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::homotopy::{BoundedComplex, HomSemantics};
use crate::quivrep::{projective_module, simple_module, ExactFunctorModel, Quiver, Representation};
use crate::trifun::{MorphismCatalog, TriangleFunctorModel};

/// `b → a`, arrow `ba`.
pub fn a2() -> Arc<Quiver> {
    Arc::new(Quiver::linear(&["a", "b"]).expect("valid quiver"))
}

/// `c → b → a`, arrows `ba` and `cb`.
pub fn a3() -> Arc<Quiver> {
    Arc::new(Quiver::linear(&["a", "b", "c"]).expect("valid quiver"))
}

/// The interval module of a linear quiver supported on vertices `lo..=hi`.
pub fn interval_module<F: Field>(q: &Arc<Quiver>, field: F, lo: usize, hi: usize) -> Result<Representation<F>> {
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(lo <= v && v <= hi)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            if r == 1 && c == 1 {
                Matrix::identity(field, 1)
            } else {
                Matrix::zeros(field, r, c)
            }
        })
        .collect();
    Representation::new(q.clone(), field, dims, maps)
}

fn a2_modules<F: Field>(field: F) -> Result<Vec<(String, Arc<Representation<F>>)>> {
    let q = a2();
    Ok(vec![
        ("S(a)".into(), Arc::new(simple_module(&q, field, "a")?)),
        ("P(b)".into(), Arc::new(projective_module(&q, field, "b")?)),
        ("S(b)".into(), Arc::new(simple_module(&q, field, "b")?)),
    ])
}

/// Indecomposables of A3 named by their usual roles: simples, projectives,
/// and the injective hull `I(b)` supported on `{b, c}`.
fn a3_modules<F: Field>(field: F) -> Result<Vec<(String, Arc<Representation<F>>)>> {
    let q = a3();
    Ok(vec![
        ("S(a)".into(), Arc::new(simple_module(&q, field, "a")?)),
        ("P(b)".into(), Arc::new(projective_module(&q, field, "b")?)),
        ("P(c)".into(), Arc::new(projective_module(&q, field, "c")?)),
        ("S(b)".into(), Arc::new(simple_module(&q, field, "b")?)),
        ("I(b)".into(), Arc::new(interval_module(&q, field, 1, 2)?)),
        ("S(c)".into(), Arc::new(simple_module(&q, field, "c")?)),
    ])
}

fn resolved<F: Field>(modules: Vec<(String, Arc<Representation<F>>)>) -> Result<Vec<(String, Arc<BoundedComplex<F>>)>> {
    modules
        .into_iter()
        .map(|(n, m)| Ok((n, Arc::new(BoundedComplex::resolve(&m)?))))
        .collect()
}

fn stalks<F: Field>(modules: Vec<(String, Arc<Representation<F>>)>) -> Vec<(String, Arc<BoundedComplex<F>>)> {
    modules
        .into_iter()
        .map(|(n, m)| (n, Arc::new(BoundedComplex::stalk(m, 0))))
        .collect()
}

/// Projective resolutions of the A2 indecomposables in shifts 0 and 1, with
/// derived Hom spaces. Declared cone-closed: cones of catalog morphisms are
/// sums of shifts of catalog objects.
pub fn a2_derived_catalog<F: Field>(field: F) -> Result<Arc<MorphismCatalog<F>>> {
    let base = resolved(a2_modules(field)?)?;
    Ok(Arc::new(
        MorphismCatalog::with_shifts(field, base, 0..=1, HomSemantics::Derived)?.declare_cone_closed(true),
    ))
}

/// The six A3 indecomposables, resolved, in shifts 0 and 1.
pub fn a3_derived_catalog<F: Field>(field: F) -> Result<Arc<MorphismCatalog<F>>> {
    let base = resolved(a3_modules(field)?)?;
    Ok(Arc::new(
        MorphismCatalog::with_shifts(field, base, 0..=1, HomSemantics::Derived)?.declare_cone_closed(true),
    ))
}

/// The A2 indecomposables as stalk complexes in degree 0; Hom spaces are module Homs.
pub fn a2_module_catalog<F: Field>(field: F) -> Result<Arc<MorphismCatalog<F>>> {
    Ok(Arc::new(MorphismCatalog::new(field, stalks(a2_modules(field)?), HomSemantics::Homotopy)?))
}

pub fn a3_module_catalog<F: Field>(field: F) -> Result<Arc<MorphismCatalog<F>>> {
    Ok(Arc::new(MorphismCatalog::new(field, stalks(a3_modules(field)?), HomSemantics::Homotopy)?))
}

/// Forgets every arrow: the functor to representations of the arrowless quiver.
pub fn forget_arrows<F: Field>(catalog: &Arc<MorphismCatalog<F>>) -> Result<TriangleFunctorModel<F>> {
    let q = catalog.object(0).quiver();
    let e = ExactFunctorModel::arrow_restriction(q, &[])?;
    Ok(TriangleFunctorModel::induce_termwise(&e, catalog)?.with_name("forget-arrows"))
}

/// Restriction to the kept vertices.
pub fn truncation<F: Field>(catalog: &Arc<MorphismCatalog<F>>, keep: &[&str]) -> Result<TriangleFunctorModel<F>> {
    let q = catalog.object(0).quiver();
    let e = ExactFunctorModel::vertex_truncation(q, keep)?;
    Ok(TriangleFunctorModel::induce_termwise(&e, catalog)?.with_name(format!("truncate-to-{}", keep.join(""))))
}

/// Catalog objects sent to zero.
pub fn killed_objects<F: Field>(f: &TriangleFunctorModel<F>) -> Vec<usize> {
    (0..f.catalog().len()).filter(|&x| f.target().is_zero_object(x)).collect()
}
