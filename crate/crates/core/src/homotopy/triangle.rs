use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quivrep::{ModuleMorphism, Representation};

use super::complex::{block_morphism, sum2};
use super::{BoundedComplex, ChainMap};

/// `X → Y → Z → X[1]`.
#[derive(Clone, Debug)]
pub struct Triangle<F: Field> {
    pub x: Arc<BoundedComplex<F>>,
    pub y: Arc<BoundedComplex<F>>,
    pub z: Arc<BoundedComplex<F>>,
    pub u: ChainMap<F>,
    pub v: ChainMap<F>,
    pub w: ChainMap<F>,
}

/// Mapping cone of `f: X → Y`: `cone^i = X^{i+1} ⊕ Y^i`, `d = [[-d_X, 0], [f, d_Y]]`.
#[derive(Clone, Debug)]
pub struct Cone<F: Field> {
    pub complex: Arc<BoundedComplex<F>>,
    /// `Y → cone(f)`.
    pub inclusion: ChainMap<F>,
    /// `cone(f) → X[1]`.
    pub projection: ChainMap<F>,
}

fn support_bounds<F: Field>(x: &BoundedComplex<F>, y: &BoundedComplex<F>, x_offset: i32) -> (i32, i32) {
    let mut lo = i32::MAX;
    let mut hi = i32::MIN;
    if !x.is_zero_complex() {
        lo = lo.min(x.lo() - x_offset);
        hi = hi.max(x.hi() - x_offset);
    }
    if !y.is_zero_complex() {
        lo = lo.min(y.lo());
        hi = hi.max(y.hi());
    }
    if lo > hi {
        (0, -1)
    } else {
        (lo, hi)
    }
}

pub fn cone<F: Field>(f: &ChainMap<F>) -> Result<Cone<F>> {
    let (x, y) = (f.source(), f.target());
    let field = f.field();
    let (lo, hi) = support_bounds(x, y, 1);
    let terms: Vec<Arc<Representation<F>>> = (lo..=hi).map(|i| sum2(x.term(i + 1), y.term(i))).collect();
    let diffs: Vec<ModuleMorphism<F>> = (lo..hi)
        .map(|i| {
            let k = (i - lo) as usize;
            let dx = x.differential(i + 1).neg();
            let fi = f.component(i + 1);
            let dy = y.differential(i);
            block_morphism(
                &terms[k],
                &terms[k + 1],
                &[x.term(i + 1), y.term(i)],
                &[x.term(i + 2), y.term(i + 1)],
                &[vec![Some(&dx), None], vec![Some(&fi), Some(&dy)]],
            )
        })
        .collect();
    let complex = Arc::new(BoundedComplex::new(x.quiver().clone(), field, lo, terms, diffs)?);
    let x1 = Arc::new(x.shift(1));
    let inclusion = ChainMap::from_fn(y.clone(), complex.clone(), |i| {
        let id = ModuleMorphism::identity(y.term(i));
        Ok(block_morphism(
            y.term(i),
            complex.term(i),
            &[y.term(i)],
            &[x.term(i + 1), y.term(i)],
            &[vec![None], vec![Some(&id)]],
        ))
    })?;
    let projection = ChainMap::from_fn(complex.clone(), x1.clone(), |i| {
        let id = ModuleMorphism::identity(x.term(i + 1));
        Ok(block_morphism(
            complex.term(i),
            x1.term(i),
            &[x.term(i + 1), y.term(i)],
            &[x.term(i + 1)],
            &[vec![Some(&id), None]],
        ))
    })?;
    Ok(Cone {
        complex,
        inclusion,
        projection,
    })
}

/// `(X, Y, cone(f), f, inclusion, projection)`.
pub fn cone_triangle<F: Field>(f: &ChainMap<F>) -> Result<Triangle<F>> {
    let c = cone(f)?;
    Ok(Triangle {
        x: f.source().clone(),
        y: f.target().clone(),
        z: c.complex.clone(),
        u: f.clone(),
        v: c.inclusion,
        w: c.projection,
    })
}

/// A distinguished triangle `(X, Y, Z, u, v, w)` whose connecting map is
/// exactly `w: Z → X[1]`.
///
/// `Y^i = Z^i ⊕ X^i` with `d(z, x) = (d_Z z, d_X x - w z)`, which is
/// `cone(-w[-1])`; `u` and `v` are the inclusion of `X` and the projection to `Z`.
pub fn realize_connecting<F: Field>(w: &ChainMap<F>) -> Result<Triangle<F>> {
    let z = w.source().clone();
    let x = Arc::new(w.target().shift(-1));
    let field = w.field();
    let (lo, hi) = support_bounds(&x, &z, 0);
    let terms: Vec<Arc<Representation<F>>> = (lo..=hi).map(|i| sum2(z.term(i), x.term(i))).collect();
    let diffs: Vec<ModuleMorphism<F>> = (lo..hi)
        .map(|i| {
            let k = (i - lo) as usize;
            let dz = z.differential(i);
            let dx = x.differential(i);
            let mw = w.component(i).neg();
            let mw = ModuleMorphism::new_unchecked(z.term(i).clone(), x.term(i + 1).clone(), mw.maps().to_vec());
            block_morphism(
                &terms[k],
                &terms[k + 1],
                &[z.term(i), x.term(i)],
                &[z.term(i + 1), x.term(i + 1)],
                &[vec![Some(&dz), None], vec![Some(&mw), Some(&dx)]],
            )
        })
        .collect();
    let y = Arc::new(BoundedComplex::new(z.quiver().clone(), field, lo, terms, diffs)?);
    let u = ChainMap::from_fn(x.clone(), y.clone(), |i| {
        let id = ModuleMorphism::identity(x.term(i));
        Ok(block_morphism(
            x.term(i),
            y.term(i),
            &[x.term(i)],
            &[z.term(i), x.term(i)],
            &[vec![None], vec![Some(&id)]],
        ))
    })?;
    let v = ChainMap::from_fn(y.clone(), z.clone(), |i| {
        let id = ModuleMorphism::identity(z.term(i));
        Ok(block_morphism(
            y.term(i),
            z.term(i),
            &[z.term(i), x.term(i)],
            &[z.term(i)],
            &[vec![Some(&id), None]],
        ))
    })?;
    Ok(Triangle {
        x,
        y,
        z,
        u,
        v,
        w: w.clone(),
    })
}

/// For a triangle produced by [`realize_connecting`]: the standard cone on
/// `u` and the chain map `φ: Z → cone(u)`, `φ(z) = (w z, (z, 0))`, which
/// satisfies `projection ∘ φ = w` and `φ ∘ v ≃ inclusion`.
pub fn realized_comparison<F: Field>(t: &Triangle<F>) -> Result<(Cone<F>, ChainMap<F>)> {
    let c = cone(&t.u)?;
    let (x, z) = (&t.x, &t.z);
    let phi = ChainMap::from_fn(z.clone(), c.complex.clone(), |i| {
        let wi = t.w.component(i);
        let wi = ModuleMorphism::new_unchecked(z.term(i).clone(), x.term(i + 1).clone(), wi.maps().to_vec());
        let id = ModuleMorphism::identity(z.term(i));
        // cone(u)^i = X^{i+1} ⊕ (Z^i ⊕ X^i)
        let into_y = block_morphism(
            z.term(i),
            t.y.term(i),
            &[z.term(i)],
            &[z.term(i), x.term(i)],
            &[vec![Some(&id)], vec![None]],
        );
        Ok(block_morphism(
            z.term(i),
            c.complex.term(i),
            &[z.term(i)],
            &[x.term(i + 1), t.y.term(i)],
            &[vec![Some(&wi)], vec![Some(&into_y)]],
        ))
    })?;
    Ok((c, phi))
}

/// Completes `(α, β)` to a morphism of standard cone triangles, `γ = α[1] ⊕ β`.
/// Requires `β ∘ u₁ = u₂ ∘ α` on the nose and both `Z`s to be the cones of the `u`s.
pub fn complete_triangle_morphism<F: Field>(
    t1: &Triangle<F>,
    t2: &Triangle<F>,
    alpha: &ChainMap<F>,
    beta: &ChainMap<F>,
) -> Result<ChainMap<F>> {
    let c1 = cone(&t1.u)?;
    let c2 = cone(&t2.u)?;
    if *c1.complex != *t1.z || *c2.complex != *t2.z {
        return Err(Error::Precondition("triangle is not in standard cone form".into()));
    }
    let lhs = beta.compose(&t1.u)?;
    let rhs = t2.u.compose(alpha)?;
    if lhs != rhs {
        return Err(Error::NotStrictlyCommuting);
    }
    let (x1, y1, x2, y2) = (&t1.x, &t1.y, &t2.x, &t2.y);
    ChainMap::from_fn(t1.z.clone(), t2.z.clone(), |i| {
        let a = alpha.component(i + 1);
        let b = beta.component(i);
        Ok(block_morphism(
            t1.z.term(i),
            t2.z.term(i),
            &[x1.term(i + 1), y1.term(i)],
            &[x2.term(i + 1), y2.term(i)],
            &[vec![Some(&a), None], vec![None, Some(&b)]],
        ))
    })
}
