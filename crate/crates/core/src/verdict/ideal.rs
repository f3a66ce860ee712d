use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::field::Field;
use crate::trifun::{Condition, ConditionVerdict, Coverage, MorphismCatalog, MorphismRef, Outcome, TriangleFunctorModel, Witness};

/// Per ordered pair `(X, Y)`: the classes killed by `F`, and the span of
/// composites `X → K → Y` through the listed kernel objects.
#[derive(Clone, Debug)]
pub struct IdealTable<F: Field> {
    catalog: Arc<MorphismCatalog<F>>,
    kernel_objects: Vec<usize>,
    ker: Vec<Subspace<F>>,
    gen: Vec<Subspace<F>>,
}

pub fn build_ideal_table<F: Field>(f: &TriangleFunctorModel<F>, kernel_objects: &[usize]) -> Result<IdealTable<F>> {
    let cat = f.catalog();
    for &k in kernel_objects {
        if k >= cat.len() {
            return Err(Error::Precondition(format!("kernel object index {k} out of range")));
        }
        if !f.target().is_zero_object(k) {
            return Err(Error::KernelObjectNotKilled(cat.name(k).to_string()));
        }
    }
    let src = f.source();
    let k = f.field();
    let pairs: Vec<(usize, usize)> = cat.pairs().collect();
    let rows: Vec<(Subspace<F>, Subspace<F>)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let ker = f.hom_map(x, y).kernel_basis();
            let mut composites = Vec::new();
            for &kk in kernel_objects {
                for a in 0..src.hom_dim(kk, y) {
                    let h = crate::trifun::unit(k, src.hom_dim(kk, y), a);
                    for b in 0..src.hom_dim(x, kk) {
                        let g = crate::trifun::unit(k, src.hom_dim(x, kk), b);
                        composites.push(src.compose(x, kk, y, &h, &g));
                    }
                }
            }
            let gen = Subspace::from_spanning(k, src.hom_dim(x, y), composites)?;
            if !gen.is_subspace_of(&ker)? {
                return Err(Error::Internal(format!(
                    "composite through a kernel object survives F at ({}, {})",
                    cat.name(x),
                    cat.name(y)
                )));
            }
            Ok((ker, gen))
        })
        .collect::<Result<Vec<_>>>()?;
    let (ker, gen) = rows.into_iter().unzip();
    Ok(IdealTable {
        catalog: cat.clone(),
        kernel_objects: kernel_objects.to_vec(),
        ker,
        gen,
    })
}

impl<F: Field> IdealTable<F> {
    pub fn catalog(&self) -> &Arc<MorphismCatalog<F>> {
        &self.catalog
    }

    pub fn kernel_objects(&self) -> &[usize] {
        &self.kernel_objects
    }

    /// Classes `X → Y` killed by `F`.
    pub fn ker(&self, x: usize, y: usize) -> &Subspace<F> {
        &self.ker[x * self.catalog.len() + y]
    }

    /// Classes `X → Y` factoring through a listed kernel object.
    pub fn gen(&self, x: usize, y: usize) -> &Subspace<F> {
        &self.gen[x * self.catalog.len() + y]
    }

    pub fn ideal(&self, which: IdealKind, x: usize, y: usize) -> &Subspace<F> {
        match which {
            IdealKind::Kernel => self.ker(x, y),
            IdealKind::Generated => self.gen(x, y),
        }
    }

    /// `true` when both ideals vanish everywhere.
    pub fn is_zero(&self) -> bool {
        self.ker.iter().chain(&self.gen).all(|s| s.dim() == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    /// Classes killed by `F`.
    Kernel,
    /// The ideal generated by the listed kernel objects.
    Generated,
}

/// Holds iff the two ideals agree on every pair; otherwise names a class in `ker \ gen`.
pub fn objectivity_verdict<F: Field>(table: &IdealTable<F>) -> ConditionVerdict<F> {
    let cat = &table.catalog;
    let mut checked = 0;
    for (x, y) in cat.pairs() {
        checked += 1;
        let (ker, gen) = (table.ker(x, y), table.gen(x, y));
        if ker.dim() == gen.dim() {
            continue;
        }
        let w = ker
            .basis()
            .iter()
            .find(|v| !gen.contains(v).expect("same ambient"))
            .expect("ker is strictly larger")
            .clone();
        let detail = format!(
            "killed by F but not through a kernel object at ({}, {}): dim gen = {}, dim ker = {}",
            cat.name(x),
            cat.name(y),
            gen.dim(),
            ker.dim()
        );
        return ConditionVerdict::aggregate(
            Condition::Objective,
            Outcome::Fails(Witness::new(detail).with_morphism(MorphismRef::source_side("w", x, y, w))),
            Coverage {
                morphisms_checked: checked,
                exhaustive: true,
            },
        );
    }
    ConditionVerdict::aggregate(
        Condition::Objective,
        Outcome::Holds(None),
        Coverage {
            morphisms_checked: checked,
            exhaustive: true,
        },
    )
    .with_note(format!("relative to {} listed kernel objects", table.kernel_objects.len()))
}
