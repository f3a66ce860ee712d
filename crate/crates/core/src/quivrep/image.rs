use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;

use super::{ModuleMorphism, Representation};

/// `f = mono ∘ epi` through the image of `f`.
#[derive(Clone, Debug)]
pub struct ImageFactorization<F: Field> {
    pub epi: ModuleMorphism<F>,
    pub image: Arc<Representation<F>>,
    pub mono: ModuleMorphism<F>,
}

/// The subrepresentation of `m` spanned at each vertex by the columns of
/// `bases[v]`, with its inclusion into `m`. The columns must be independent
/// and the family must be stable under the arrows.
pub fn subrepresentation<F: Field>(
    m: &Arc<Representation<F>>,
    bases: Vec<Matrix<F>>,
) -> Result<(Arc<Representation<F>>, ModuleMorphism<F>)> {
    let q = m.quiver();
    let field = m.field();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let pushed = m.map(ai) * &bases[a.source];
            bases[a.target]
                .solve_matrix(&pushed)?
                .ok_or_else(|| Error::Precondition(format!("subspace not stable under arrow `{}`", a.label)))
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = Arc::new(Representation::new(q.clone(), field, dims, maps)?);
    let inclusion = ModuleMorphism::new(sub.clone(), m.clone(), bases)?;
    Ok((sub, inclusion))
}

pub fn image_factorization<F: Field>(f: &ModuleMorphism<F>) -> Result<ImageFactorization<F>> {
    let bases: Vec<Matrix<F>> = f.maps().iter().map(|m| m.image_basis().basis_matrix()).collect();
    let (image, mono) = subrepresentation(f.target(), bases)?;
    let epi_maps = f
        .maps()
        .iter()
        .zip(mono.maps())
        .map(|(fv, bv)| {
            bv.solve_matrix(fv)?
                .ok_or_else(|| Error::Internal("map does not factor through its image".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let epi = ModuleMorphism::new(f.source().clone(), image.clone(), epi_maps)?;
    Ok(ImageFactorization { epi, image, mono })
}

/// Kernel of `f` as a subrepresentation of its source.
pub fn kernel_of<F: Field>(f: &ModuleMorphism<F>) -> Result<(Arc<Representation<F>>, ModuleMorphism<F>)> {
    let bases: Vec<Matrix<F>> = f.maps().iter().map(|m| m.kernel_basis().basis_matrix()).collect();
    subrepresentation(f.source(), bases)
}
