use crate::exactlin::Matrix;
use crate::field::Field;

use super::{IdealKind, IdealTable};

/// `Hom(X, Y) / I(X, Y)` with its canonical projection.
#[derive(Clone, Debug)]
pub struct QuotientHom<F: Field> {
    pub source: usize,
    pub target: usize,
    pub kind: IdealKind,
    pub hom_dim: usize,
    pub ideal_dim: usize,
    /// `(hom_dim - ideal_dim) × hom_dim`.
    pub projection: Matrix<F>,
}

impl<F: Field> QuotientHom<F> {
    pub fn dim(&self) -> usize {
        self.hom_dim - self.ideal_dim
    }

    pub fn project(&self, class: &[F::Elem]) -> Vec<F::Elem> {
        self.projection.apply(class).expect("class length")
    }
}

pub fn quotient_hom<F: Field>(table: &IdealTable<F>, kind: IdealKind, x: usize, y: usize) -> QuotientHom<F> {
    let ideal = table.ideal(kind, x, y);
    QuotientHom {
        source: x,
        target: y,
        kind,
        hom_dim: ideal.ambient_dim(),
        ideal_dim: ideal.dim(),
        projection: ideal.quotient_projection(),
    }
}

/// A composite that leaves the ideal, so composition would not descend to the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLeak {
    /// `X → Y → Z`; the ideal element sits on `X → Y` when the flag is set.
    pub objects: (usize, usize, usize),
    pub ideal_on_first_leg: bool,
}

/// Checks `f ∘ i ∈ I` and `i ∘ g ∈ I` over ideal and Hom bases, which by
/// bilinearity covers every element.
pub fn ideal_is_two_sided<F: Field>(table: &IdealTable<F>, kind: IdealKind) -> Option<IdealLeak> {
    let cat = table.catalog();
    let src = cat.category();
    let k = cat.field();
    let n = cat.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let target = table.ideal(kind, x, z);
                for i in table.ideal(kind, x, y).basis() {
                    for a in 0..src.hom_dim(y, z) {
                        let f = crate::trifun::unit(k, src.hom_dim(y, z), a);
                        if !target.contains(&src.compose(x, y, z, &f, i)).expect("ambient") {
                            return Some(IdealLeak {
                                objects: (x, y, z),
                                ideal_on_first_leg: true,
                            });
                        }
                    }
                }
                for i in table.ideal(kind, y, z).basis() {
                    for b in 0..src.hom_dim(x, y) {
                        let g = crate::trifun::unit(k, src.hom_dim(x, y), b);
                        if !target.contains(&src.compose(x, y, z, i, &g)).expect("ambient") {
                            return Some(IdealLeak {
                                objects: (x, y, z),
                                ideal_on_first_leg: false,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}
