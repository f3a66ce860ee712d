use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::quivrep::{direct_sum, ModuleMorphism, Quiver, Representation};

/// A bounded cochain complex of representations, `d_i: C^i → C^{i+1}`.
///
/// Zero terms at either end are trimmed on construction, so two complexes
/// with the same nonzero data compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedComplex<F: Field> {
    quiver: Arc<Quiver>,
    field: F,
    lo: i32,
    terms: Vec<Arc<Representation<F>>>,
    diffs: Vec<ModuleMorphism<F>>,
    zero: Arc<Representation<F>>,
}

impl<F: Field> BoundedComplex<F> {
    /// `terms[k]` sits in degree `lo + k`; `diffs[k]` maps `terms[k] → terms[k+1]`.
    pub fn new(
        quiver: Arc<Quiver>,
        field: F,
        lo: i32,
        terms: Vec<Arc<Representation<F>>>,
        diffs: Vec<ModuleMorphism<F>>,
    ) -> Result<Self> {
        if diffs.len() + 1 != terms.len() && !(terms.is_empty() && diffs.is_empty()) {
            return Err(Error::DimensionMismatch(format!(
                "{} differentials for {} terms",
                diffs.len(),
                terms.len()
            )));
        }
        for t in &terms {
            if **t.quiver() != *quiver {
                return Err(Error::QuiverMismatch);
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            let deg = lo + k as i32;
            if **d.source() != *terms[k] || **d.target() != *terms[k + 1] {
                return Err(Error::DimensionMismatch(format!("differential in degree {deg} has the wrong endpoints")));
            }
            if k + 1 < diffs.len() && !diffs[k + 1].compose(d)?.is_zero() {
                return Err(Error::NotAComplex(deg));
            }
        }
        let zero = Arc::new(Representation::zero(quiver.clone(), field));
        Ok(Self::trimmed(quiver, field, lo, terms, diffs, zero))
    }

    fn trimmed(
        quiver: Arc<Quiver>,
        field: F,
        mut lo: i32,
        mut terms: Vec<Arc<Representation<F>>>,
        mut diffs: Vec<ModuleMorphism<F>>,
        zero: Arc<Representation<F>>,
    ) -> Self {
        while terms.last().is_some_and(|t| t.is_zero()) {
            terms.pop();
            diffs.pop();
        }
        let lead = terms.iter().take_while(|t| t.is_zero()).count();
        if lead > 0 {
            terms.drain(..lead);
            diffs.drain(..lead.min(diffs.len()));
            lo += lead as i32;
        }
        if terms.is_empty() {
            lo = 0;
            diffs.clear();
        }
        BoundedComplex {
            quiver,
            field,
            lo,
            terms,
            diffs,
            zero,
        }
    }

    pub fn zero(quiver: Arc<Quiver>, field: F) -> Self {
        let zero = Arc::new(Representation::zero(quiver.clone(), field));
        BoundedComplex {
            quiver,
            field,
            lo: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
            zero,
        }
    }

    /// The module `m` concentrated in `degree`.
    pub fn stalk(m: Arc<Representation<F>>, degree: i32) -> Self {
        let quiver = m.quiver().clone();
        let field = m.field();
        let zero = Arc::new(Representation::zero(quiver.clone(), field));
        Self::trimmed(quiver, field, degree, vec![m], Vec::new(), zero)
    }

    /// Two-term complex `P → Q` with `Q` in degree `degree`.
    pub fn two_term(d: ModuleMorphism<F>, degree: i32) -> Result<Self> {
        let (s, t) = (d.source().clone(), d.target().clone());
        BoundedComplex::new(s.quiver().clone(), s.field(), degree - 1, vec![s, t], vec![d])
    }

    /// `P₁ → P₀` with `P₀` in degree 0, quasi-isomorphic to the resolved module.
    pub fn from_resolution(r: &crate::quivrep::ProjectiveResolution<F>) -> Result<Self> {
        Self::two_term(r.differential.clone(), 0)
    }

    /// Projective resolution of `m` as a complex.
    pub fn resolve(m: &Arc<Representation<F>>) -> Result<Self> {
        Self::from_resolution(&crate::quivrep::projective_resolution(m)?)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest nonzero degree; `lo - 1` for the zero complex.
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn is_zero_complex(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn term(&self, i: i32) -> &Arc<Representation<F>> {
        if i < self.lo || i > self.hi() {
            &self.zero
        } else {
            &self.terms[(i - self.lo) as usize]
        }
    }

    pub fn terms(&self) -> &[Arc<Representation<F>>] {
        &self.terms
    }

    pub fn zero_term(&self) -> &Arc<Representation<F>> {
        &self.zero
    }

    /// `d_i: C^i → C^{i+1}`, zero outside the support.
    pub fn differential(&self, i: i32) -> ModuleMorphism<F> {
        match self.stored_differential(i) {
            Some(d) => d.clone(),
            None => ModuleMorphism::zero(self.term(i), self.term(i + 1)),
        }
    }

    pub(crate) fn stored_differential(&self, i: i32) -> Option<&ModuleMorphism<F>> {
        if i < self.lo || i >= self.hi() {
            None
        } else {
            Some(&self.diffs[(i - self.lo) as usize])
        }
    }

    /// Matrix of `d_i` at vertex `v`.
    pub fn differential_at(&self, i: i32, v: usize) -> Matrix<F> {
        match self.stored_differential(i) {
            Some(d) => d.map(v).clone(),
            None => Matrix::zeros(self.field, self.term(i + 1).dim(v), self.term(i).dim(v)),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(|t| t.total_dim()).sum()
    }

    /// `C[n]`: degree `i` holds `C^{i+n}`, differential `(-1)^n d`.
    pub fn shift(&self, n: i32) -> Self {
        let diffs = if n.rem_euclid(2) == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(|d| d.neg()).collect()
        };
        BoundedComplex {
            quiver: self.quiver.clone(),
            field: self.field,
            lo: if self.terms.is_empty() { 0 } else { self.lo - n },
            terms: self.terms.clone(),
            diffs,
            zero: self.zero.clone(),
        }
    }

    /// Dimension vector of `H^i` for each degree in the support.
    pub fn cohomology_dims(&self) -> Vec<(i32, Vec<usize>)> {
        let nv = self.quiver.vertex_count();
        self.degrees()
            .map(|i| {
                let dims = (0..nv)
                    .map(|v| {
                        let out = self.differential_at(i, v);
                        let inc = self.differential_at(i - 1, v);
                        out.cols() - out.rank() - inc.rank()
                    })
                    .collect();
                (i, dims)
            })
            .collect()
    }

    /// Whether every term is a projective module.
    pub fn has_projective_terms(&self) -> Result<bool> {
        for t in &self.terms {
            if !crate::quivrep::is_projective(t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Assembles a module morphism whose vertex matrices are block matrices
/// over fixed decompositions of source and target.
pub(crate) fn block_morphism<F: Field>(
    source: &Arc<Representation<F>>,
    target: &Arc<Representation<F>>,
    col_parts: &[&Arc<Representation<F>>],
    row_parts: &[&Arc<Representation<F>>],
    blocks: &[Vec<Option<&ModuleMorphism<F>>>],
) -> ModuleMorphism<F> {
    let field = source.field();
    let maps = (0..source.quiver().vertex_count())
        .map(|v| {
            let rd: Vec<usize> = row_parts.iter().map(|r| r.dim(v)).collect();
            let cd: Vec<usize> = col_parts.iter().map(|c| c.dim(v)).collect();
            let bl: Vec<Vec<Option<&Matrix<F>>>> = blocks
                .iter()
                .map(|row| row.iter().map(|b| b.map(|m| m.map(v))).collect())
                .collect();
            Matrix::block(field, &rd, &cd, &bl).expect("block shapes follow the decompositions")
        })
        .collect();
    ModuleMorphism::new_unchecked(source.clone(), target.clone(), maps)
}

/// Termwise direct sum of two representations; handles the all-zero case.
pub(crate) fn sum2<F: Field>(a: &Arc<Representation<F>>, b: &Arc<Representation<F>>) -> Arc<Representation<F>> {
    direct_sum(&[a.clone(), b.clone()]).expect("same quiver").object
}

/// A direct sum of complexes with its inclusions and projections.
#[derive(Clone, Debug)]
pub struct ComplexBiproduct<F: Field> {
    pub object: Arc<BoundedComplex<F>>,
    pub inclusions: Vec<super::ChainMap<F>>,
    pub projections: Vec<super::ChainMap<F>>,
}

pub fn complex_direct_sum<F: Field>(parts: &[Arc<BoundedComplex<F>>]) -> Result<ComplexBiproduct<F>> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Precondition("direct sum of an empty family of complexes".into()))?;
    let (quiver, field) = (first.quiver.clone(), first.field);
    if parts.iter().any(|c| c.quiver != quiver) {
        return Err(Error::QuiverMismatch);
    }
    let lo = parts.iter().filter(|c| !c.is_zero_complex()).map(|c| c.lo()).min().unwrap_or(0);
    let hi = parts.iter().filter(|c| !c.is_zero_complex()).map(|c| c.hi()).max().unwrap_or(-1);
    let sums: Vec<_> = (lo..=hi)
        .map(|i| {
            let ts: Vec<_> = parts.iter().map(|c| c.term(i).clone()).collect();
            direct_sum(&ts)
        })
        .collect::<Result<_>>()?;
    let terms: Vec<_> = sums.iter().map(|s| s.object.clone()).collect();
    let diffs: Vec<_> = (lo..hi)
        .map(|i| {
            let k = (i - lo) as usize;
            let ds: Vec<ModuleMorphism<F>> = parts.iter().map(|c| c.differential(i)).collect();
            let src: Vec<_> = parts.iter().map(|c| c.term(i)).collect();
            let tgt: Vec<_> = parts.iter().map(|c| c.term(i + 1)).collect();
            let blocks: Vec<Vec<Option<&ModuleMorphism<F>>>> = (0..parts.len())
                .map(|r| (0..parts.len()).map(|c| (r == c).then_some(&ds[r])).collect())
                .collect();
            block_morphism(&terms[k], &terms[k + 1], &src, &tgt, &blocks)
        })
        .collect();
    let zero = Arc::new(Representation::zero(quiver.clone(), field));
    let object = Arc::new(BoundedComplex::trimmed(quiver, field, lo, terms, diffs, zero));
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        let inc = super::ChainMap::from_fn(part.clone(), object.clone(), |i| {
            Ok(sums[(i - lo) as usize].inclusions[j].clone())
        })?;
        let proj = super::ChainMap::from_fn(object.clone(), part.clone(), |i| {
            Ok(sums[(i - lo) as usize].projections[j].clone())
        })?;
        inclusions.push(inc);
        projections.push(proj);
    }
    Ok(ComplexBiproduct {
        object,
        inclusions,
        projections,
    })
}
