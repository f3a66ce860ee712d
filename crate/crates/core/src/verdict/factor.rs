use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homotopy::{
    complete_triangle_morphism, cone, cone_triangle, homotopy_hom, is_homotopy_equivalence, is_null_homotopic,
    is_zero_object, realize_connecting, realized_comparison, BoundedComplex, ChainMap,
};
use crate::trifun::{SamplingPolicy, TriangleFunctorModel};

/// `w = h ∘ g` through `K` with `F(K) ≅ 0`.
#[derive(Clone, Debug)]
pub struct KernelFactorization<F: Field> {
    pub kernel: Arc<BoundedComplex<F>>,
    pub g: ChainMap<F>,
    pub h: ChainMap<F>,
    /// Both `h ∘ g ≃ w` and `F(K) ≅ 0` were re-checked.
    pub certified: bool,
    /// Catalog index of `X'` and the class `u': Y → X'` used, if any.
    pub via: Option<(usize, Vec<<F as Field>::Elem>)>,
}

#[derive(Clone, Debug)]
pub enum FactorizationOutcome<F: Field> {
    Factored(KernelFactorization<F>),
    /// No `u'` with `F(u'u)` invertible among the candidates.
    Exhausted { tried: usize, exhaustive: bool },
}

impl<F: Field> FactorizationOutcome<F> {
    pub fn factorization(&self) -> Option<&KernelFactorization<F>> {
        match self {
            FactorizationOutcome::Factored(k) => Some(k),
            FactorizationOutcome::Exhausted { .. } => None,
        }
    }
}

/// Factors a class `w: Z → X[1]` killed by `F` through an object killed by `F`.
///
/// Realizes `X → Y → Z → X[1]` on `w`, searches the candidates for
/// `u': Y → X'` with `F(u'u)` invertible, and reads `g`, `h` off the morphism
/// from the triangle on `u` to the triangle on `u'u`.
pub fn factor_through_kernel<F: Field>(
    f: &TriangleFunctorModel<F>,
    w: &ChainMap<F>,
    candidates: &[usize],
    policy: &SamplingPolicy,
) -> Result<FactorizationOutcome<F>> {
    let semantics = f.catalog().semantics();
    let fz = Arc::new(f.apply_complex(w.source())?);
    let fx1 = Arc::new(f.apply_complex(w.target())?);
    let fw = f.apply_chain_map(w, &fz, &fx1)?;
    if !homotopy_hom(&fz, &fx1, semantics)?.is_null_homotopic(&fw)? {
        return Err(Error::Precondition("F(w) is not zero".into()));
    }
    if is_null_homotopic(w)? {
        let kernel = Arc::new(BoundedComplex::zero(w.source().quiver().clone(), w.field()));
        return Ok(FactorizationOutcome::Factored(KernelFactorization {
            g: ChainMap::zero(w.source(), &kernel),
            h: ChainMap::zero(&kernel, w.target()),
            kernel,
            certified: true,
            via: None,
        }));
    }
    let t = realize_connecting(w)?;
    let fx = Arc::new(f.apply_complex(&t.x)?);
    let mut tried = 0;
    let mut exhaustive = true;
    for &xp in candidates {
        let target = f.catalog().object(xp);
        let hom = homotopy_hom(&t.y, target, semantics)?;
        let sample = policy.elements(f.field(), hom.dim(), crate::trifun::salt(xp, 0, 7));
        exhaustive &= sample.exhaustive;
        let fxp = f.target().object(xp);
        for coords in &sample.elements {
            tried += 1;
            let up = hom.representative(coords);
            let a = up.compose(&t.u)?;
            if !is_homotopy_equivalence(&f.apply_chain_map(&a, &fx, fxp)?, semantics)? {
                continue;
            }
            let t1 = cone_triangle(&t.u)?;
            let t2 = cone_triangle(&a)?;
            let gamma = complete_triangle_morphism(&t1, &t2, &ChainMap::identity(&t.x), &up)?;
            let (_, phi) = realized_comparison(&t)?;
            let g = gamma.compose(&phi)?;
            let h = t2.w.clone();
            let kernel = cone(&a)?.complex;
            let certified = is_null_homotopic(&h.compose(&g)?.sub(w)?)? && is_zero_object(&Arc::new(f.apply_complex(&kernel)?))?;
            return Ok(FactorizationOutcome::Factored(KernelFactorization {
                kernel,
                g,
                h,
                certified,
                via: Some((xp, coords.clone())),
            }));
        }
    }
    Ok(FactorizationOutcome::Exhausted { tried, exhaustive })
}
