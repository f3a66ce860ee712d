use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::field::Field;

use super::{ModuleMorphism, Path, Quiver};

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix (target dim × source dim) per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<F: Field> {
    quiver: Arc<Quiver>,
    field: F,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(quiver: Arc<Quiver>, field: F, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrow_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} arrow matrices for {} arrows",
                maps.len(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` carries a {:?} matrix, expected {:?}",
                    a.label,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
        }
        Ok(Representation { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: F) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Representation { quiver, field, dims, maps }
    }

    pub fn simple(quiver: Arc<Quiver>, field: F, v: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Representation { quiver, field, dims, maps }
    }

    /// Indecomposable projective at `v`: basis = paths starting at `v`, arrows act by extending paths.
    pub fn projective(quiver: Arc<Quiver>, field: F, v: usize) -> Self {
        let groups = quiver.paths_by_end(v);
        let dims: Vec<usize> = groups.iter().map(|g| g.len()).collect();
        let maps = (0..quiver.arrow_count())
            .map(|a| {
                let arrow = quiver.arrow(a);
                let mut m = Matrix::zeros(field, dims[arrow.target], dims[arrow.source]);
                for (j, p) in groups[arrow.source].iter().enumerate() {
                    let mut extended = p.arrows.clone();
                    extended.push(a);
                    let i = groups[arrow.target]
                        .iter()
                        .position(|q| q.arrows == extended)
                        .expect("extended path is enumerated");
                    m.set(i, j, field.one());
                }
                m
            })
            .collect();
        Representation { quiver, field, dims, maps }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Composite of the arrow matrices along `path`.
    pub fn path_map(&self, path: &Path) -> Matrix<F> {
        path.arrows.iter().fold(Matrix::identity(self.field, self.dims[path.start]), |acc, &a| {
            &self.maps[a] * &acc
        })
    }

    /// Sum of the images of all arrows ending at `v`.
    pub fn radical(&self, v: usize) -> Subspace<F> {
        let columns = self.quiver.incoming(v).flat_map(|a| self.maps[a].columns());
        Subspace::from_spanning(self.field, self.dims[v], columns).expect("arrow images live in the vertex space")
    }

    pub(crate) fn same_as(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

/// `simple_module(Q, v)` by vertex label.
pub fn simple_module<F: Field>(quiver: &Arc<Quiver>, field: F, vertex: &str) -> Result<Representation<F>> {
    let v = quiver.vertex_index(vertex)?;
    Ok(Representation::simple(quiver.clone(), field, v))
}

/// `projective_module(Q, v)` by vertex label.
pub fn projective_module<F: Field>(quiver: &Arc<Quiver>, field: F, vertex: &str) -> Result<Representation<F>> {
    let v = quiver.vertex_index(vertex)?;
    Ok(Representation::projective(quiver.clone(), field, v))
}

/// A direct sum with its canonical inclusions and projections.
#[derive(Clone, Debug)]
pub struct Biproduct<F: Field> {
    pub object: Arc<Representation<F>>,
    pub inclusions: Vec<ModuleMorphism<F>>,
    pub projections: Vec<ModuleMorphism<F>>,
}

pub fn direct_sum<F: Field>(summands: &[Arc<Representation<F>>]) -> Result<Biproduct<F>> {
    let first = summands
        .first()
        .ok_or_else(|| Error::Precondition("direct sum of an empty family needs an explicit quiver".into()))?;
    let (quiver, field) = (first.quiver.clone(), first.field);
    if summands.iter().any(|m| m.quiver != quiver) {
        return Err(Error::QuiverMismatch);
    }
    let n = quiver.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| summands.iter().map(|m| m.dims[v]).sum()).collect();
    let maps = (0..quiver.arrow_count())
        .map(|a| {
            let blocks: Vec<&Matrix<F>> = summands.iter().map(|m| &m.maps[a]).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    let object = Arc::new(Representation::new(quiver, field, dims.clone(), maps)?);
    let mut inclusions = Vec::with_capacity(summands.len());
    let mut projections = Vec::with_capacity(summands.len());
    let mut offsets = vec![0usize; n];
    for m in summands {
        let incl: Vec<Matrix<F>> = (0..n)
            .map(|v| {
                Matrix::from_fn(field, dims[v], m.dims[v], |i, j| {
                    if i == offsets[v] + j {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
            })
            .collect();
        let proj: Vec<Matrix<F>> = incl.iter().map(|x| x.transpose()).collect();
        inclusions.push(ModuleMorphism::new_unchecked(m.clone(), object.clone(), incl));
        projections.push(ModuleMorphism::new_unchecked(object.clone(), m.clone(), proj));
        for v in 0..n {
            offsets[v] += m.dims[v];
        }
    }
    Ok(Biproduct {
        object,
        inclusions,
        projections,
    })
}
