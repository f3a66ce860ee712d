use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{fitting_decomposition, FittingSplit, Matrix};
use crate::field::Field;
use crate::homotopy::{is_zero_object, BoundedComplex, ChainMap};
use crate::quivrep::{subrepresentation, ModuleMorphism, Representation};
use crate::trifun::TriangleFunctorModel;

/// `X = X' ⊕ X''` for a chain endomorphism `a`, with `a` invertible on `X'`
/// and nilpotent on `X''`.
#[derive(Clone, Debug)]
pub struct ComplexFittingSplit<F: Field> {
    pub invertible: Arc<BoundedComplex<F>>,
    pub nilpotent: Arc<BoundedComplex<F>>,
    /// `u': X' → X`.
    pub include: ChainMap<F>,
    /// `p': X → X'`.
    pub project: ChainMap<F>,
    /// `X'' → X`.
    pub include_nilpotent: ChainMap<F>,
    /// Matrix splits by degree, then vertex.
    pub splits: Vec<(i32, Vec<FittingSplit<F>>)>,
}

/// Lifts the degree- and vertex-wise Fitting splits of `a` to subcomplexes.
/// Stable images and kernels of `a` are subcomplexes because `a` commutes with `d`.
pub fn split_complex<F: Field>(a: &ChainMap<F>) -> Result<ComplexFittingSplit<F>> {
    let x = a.source();
    if **a.target() != **x {
        return Err(Error::Precondition("Fitting split needs an endomorphism".into()));
    }
    let field = x.field();
    let q = x.quiver();
    let splits: Vec<(i32, Vec<FittingSplit<F>>)> = x
        .degrees()
        .map(|i| {
            let c = a.component(i);
            let per_vertex = c.maps().iter().map(fitting_decomposition).collect::<Result<Vec<_>>>()?;
            Ok((i, per_vertex))
        })
        .collect::<Result<_>>()?;
    let part = |invertible: bool| -> Result<(Arc<BoundedComplex<F>>, Vec<ModuleMorphism<F>>)> {
        let mut terms: Vec<Arc<Representation<F>>> = Vec::new();
        let mut incl = Vec::new();
        for (i, sv) in &splits {
            let bases = sv
                .iter()
                .map(|s| if invertible { s.invertible_part_basis() } else { s.nilpotent_part_basis() })
                .collect();
            let (sub, inc) = subrepresentation(x.term(*i), bases)?;
            terms.push(sub);
            incl.push(inc);
        }
        let diffs = (0..splits.len().saturating_sub(1))
            .map(|k| {
                let i = splits[k].0;
                let d = x.differential(i);
                let maps = (0..q.vertex_count())
                    .map(|v| {
                        let pushed = d.map(v) * incl[k].map(v);
                        incl[k + 1].map(v).solve_matrix(&pushed)?.ok_or_else(|| {
                            Error::Internal(format!("Fitting part is not a subcomplex in degree {i}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                ModuleMorphism::new(terms[k].clone(), terms[k + 1].clone(), maps)
            })
            .collect::<Result<Vec<_>>>()?;
        let c = BoundedComplex::new(q.clone(), field, x.lo(), terms, diffs)?;
        Ok((Arc::new(c), incl))
    };
    let (invertible, inc1) = part(true)?;
    let (nilpotent, inc2) = part(false)?;
    let lo = x.lo();
    let at = |i: i32| (i - lo) as usize;
    let include = ChainMap::from_fn(invertible.clone(), x.clone(), |i| {
        ModuleMorphism::new(invertible.term(i).clone(), x.term(i).clone(), inc1[at(i)].maps().to_vec())
    })?;
    let include_nilpotent = ChainMap::from_fn(nilpotent.clone(), x.clone(), |i| {
        ModuleMorphism::new(nilpotent.term(i).clone(), x.term(i).clone(), inc2[at(i)].maps().to_vec())
    })?;
    let project = ChainMap::from_fn(x.clone(), invertible.clone(), |i| {
        let maps: Vec<Matrix<F>> = splits[at(i)].1.iter().map(|s| s.invertible_part_projection()).collect();
        ModuleMorphism::new(x.term(i).clone(), invertible.term(i).clone(), maps)
    })?;
    Ok(ComplexFittingSplit {
        invertible,
        nilpotent,
        include,
        project,
        include_nilpotent,
        splits,
    })
}

/// Data exhibiting `V(s)⁻¹ = V(m)` in the Verdier quotient.
#[derive(Clone, Debug)]
pub struct VerdierInverseWitness<F: Field> {
    pub source: usize,
    pub target: usize,
    pub s: Vec<F::Elem>,
    /// Class of `t: Y → X` with `F(t) = F(s)⁻¹`.
    pub t: Vec<F::Elem>,
    /// `a = t ∘ s`.
    pub a: ChainMap<F>,
    pub split: ComplexFittingSplit<F>,
    /// `m = u' b' p' t: Y → X` at chain level, and its class.
    pub m: ChainMap<F>,
    pub m_class: Vec<F::Elem>,
    /// `F(m ∘ s) = 1` and `F(X'') ≅ 0`, checked by recomposition.
    pub verified: bool,
}

pub fn fitting_inverse_witness<F: Field>(
    f: &TriangleFunctorModel<F>,
    x: usize,
    y: usize,
    s: &[F::Elem],
) -> Result<VerdierInverseWitness<F>> {
    let (src, tgt) = (f.source(), f.target());
    let fs = f.map_class(x, y, s);
    let inv = tgt
        .inverse(x, y, &fs)
        .ok_or_else(|| Error::Precondition("F(s) is not invertible".into()))?;
    let t = f
        .hom_map(y, x)
        .solve(&inv)?
        .ok_or_else(|| Error::Precondition("F(s)^-1 is not in the image of F".into()))?;
    let s_rep = src.hom(x, y).representative(s);
    let t_rep = src.hom(y, x).representative(&t);
    let a = t_rep.compose(&s_rep)?;
    let split = split_complex(&a)?;
    let a1 = split.project.compose(&a.compose(&split.include)?)?;
    let b1 = ChainMap::from_fn(split.invertible.clone(), split.invertible.clone(), |i| {
        let c = a1.component(i);
        let maps = c
            .maps()
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Internal("invertible part of a is singular".into())))
            .collect::<Result<Vec<_>>>()?;
        ModuleMorphism::new(c.source().clone(), c.target().clone(), maps)
    })?;
    let m = split.include.compose(&b1.compose(&split.project.compose(&t_rep)?)?)?;
    let m_class = src.hom(y, x).class_coords(&m)?;
    let ms = src.compose(x, y, x, &m_class, s);
    let verified = f.map_class(x, x, &ms) == tgt.identity(x)
        && is_zero_object(&Arc::new(f.apply_complex(&split.nilpotent)?))?;
    Ok(VerdierInverseWitness {
        source: x,
        target: y,
        s: s.to_vec(),
        t,
        a,
        split,
        m,
        m_class,
        verified,
    })
}
