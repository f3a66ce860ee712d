use crate::field::Field;
use crate::homotopy::ChainMap;

use super::{
    aggregate, Condition, ConditionVerdict, Coverage, MorphismRef, Outcome, SamplingPolicy, TriangleFunctorModel, Witness,
};

fn target_class<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> Vec<F::Elem> {
    f.map_class(x, y, u)
}

fn fail_at<F: Field>(detail: String, x: usize, y: usize, u: &[F::Elem]) -> Outcome<F> {
    Outcome::Fails(Witness::new(detail).with_morphism(MorphismRef::source_side("u", x, y, u.to_vec())))
}

/// (I): if `F(u)` is invertible, its inverse is `F(u')` for some `u': Y → X`.
pub fn check_i<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::IsoLifting, x, y, u, iso_lifting(f, x, y, u))
}

pub(crate) fn iso_lifting<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> Outcome<F> {
    let fu = target_class(f, x, y, u);
    let Some(inv) = f.target().inverse(x, y, &fu) else {
        return Outcome::Holds(None);
    };
    match f.hom_map(y, x).solve(&inv).expect("shapes agree") {
        Some(up) => Outcome::Holds(Some(
            Witness::new("F(u') inverts F(u)").with_morphism(MorphismRef::source_side("u'", y, x, up)),
        )),
        None => Outcome::Fails(
            Witness::new("F(u) is invertible but its inverse is not in the image of F")
                .with_morphism(MorphismRef::source_side("u", x, y, u.to_vec()))
                .with_morphism(MorphismRef::target_side("F(u)^-1", y, x, inv)),
        ),
    }
}

/// (SM): if `F(u)` is a split mono, `F(u'u) = 1` for some `u': Y → X`.
pub fn check_sm<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::SplitMono, x, y, u, split_mono(f, x, y, u))
}

pub(crate) fn split_mono<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> Outcome<F> {
    let t = f.target();
    let fu = target_class(f, x, y, u);
    if !t.is_split_mono(x, y, &fu) {
        return Outcome::Holds(None);
    }
    // u' ↦ F(u') ∘ F(u)
    let m = &t.precompose_matrix(x, y, x, &fu) * f.hom_map(y, x);
    match m.solve(&t.identity(x)).expect("shapes agree") {
        Some(up) => Outcome::Holds(Some(
            Witness::new("F(u'u) = 1").with_morphism(MorphismRef::source_side("u'", y, x, up)),
        )),
        None => fail_at("F(u) is a split mono but no u' with F(u'u) = 1".into(), x, y, u),
    }
}

/// (SE): if `F(v)` is a split epi, `F(vv') = 1` for some `v': Z → Y`.
pub fn check_se<F: Field>(f: &TriangleFunctorModel<F>, y: usize, z: usize, v: &[F::Elem]) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::SplitEpi, y, z, v, split_epi(f, y, z, v))
}

pub(crate) fn split_epi<F: Field>(f: &TriangleFunctorModel<F>, y: usize, z: usize, v: &[F::Elem]) -> Outcome<F> {
    let t = f.target();
    let fv = target_class(f, y, z, v);
    if !t.is_split_epi(y, z, &fv) {
        return Outcome::Holds(None);
    }
    // v' ↦ F(v) ∘ F(v')
    let m = &t.postcompose_matrix(z, y, z, &fv) * f.hom_map(z, y);
    match m.solve(&t.identity(z)).expect("shapes agree") {
        Some(vp) => Outcome::Holds(Some(
            Witness::new("F(vv') = 1").with_morphism(MorphismRef::source_side("v'", z, y, vp)),
        )),
        None => Outcome::Fails(
            Witness::new("F(v) is a split epi but no v' with F(vv') = 1")
                .with_morphism(MorphismRef::source_side("v", y, z, v.to_vec())),
        ),
    }
}

/// (WSM) searched over `candidates`: some `u': Y → X'` with `F(u'u)` invertible.
/// An exhausted search is reported as unknown, since `X'` ranges over the whole category.
pub fn check_wsm<F: Field>(
    f: &TriangleFunctorModel<F>,
    x: usize,
    y: usize,
    u: &[F::Elem],
    candidates: &[usize],
    policy: &SamplingPolicy,
) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::WeakSplitMono, x, y, u, weak_split_mono(f, x, y, u, candidates, policy))
}

pub(crate) fn weak_split_mono<F: Field>(
    f: &TriangleFunctorModel<F>,
    x: usize,
    y: usize,
    u: &[F::Elem],
    candidates: &[usize],
    policy: &SamplingPolicy,
) -> Outcome<F> {
    let t = f.target();
    let fu = target_class(f, x, y, u);
    if !t.is_split_mono(x, y, &fu) {
        return Outcome::Holds(None);
    }
    if candidates.contains(&x) {
        if let Outcome::Holds(Some(w)) = split_mono(f, x, y, u) {
            let up = w.morphism("u'").expect("split mono witness").coords.clone();
            return Outcome::Holds(Some(
                Witness::new("F(u'u) is invertible")
                    .with_object(x)
                    .with_morphism(MorphismRef::source_side("u'", y, x, up)),
            ));
        }
    }
    let mut tried = 0;
    for &xp in candidates {
        let sample = policy.elements(f.field(), f.catalog().hom_dim(y, xp), salt(y, xp, 1));
        for up in &sample.elements {
            tried += 1;
            let fup = f.map_class(y, xp, up);
            let composite = t.compose(x, y, xp, &fup, &fu);
            if t.is_iso(x, xp, &composite) {
                return Outcome::Holds(Some(
                    Witness::new("F(u'u) is invertible")
                        .with_object(xp)
                        .with_morphism(MorphismRef::source_side("u'", y, xp, up.clone())),
                ));
            }
        }
    }
    Outcome::Unknown(format!("no u' found among {tried} morphisms to {} candidate objects", candidates.len()))
}

/// (WSE) searched over `candidates`: some `v': Y' → Z` with `F(vv')` invertible.
pub fn check_wse<F: Field>(
    f: &TriangleFunctorModel<F>,
    y: usize,
    z: usize,
    v: &[F::Elem],
    candidates: &[usize],
    policy: &SamplingPolicy,
) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::WeakSplitEpi, y, z, v, weak_split_epi(f, y, z, v, candidates, policy))
}

pub(crate) fn weak_split_epi<F: Field>(
    f: &TriangleFunctorModel<F>,
    y: usize,
    z: usize,
    v: &[F::Elem],
    candidates: &[usize],
    policy: &SamplingPolicy,
) -> Outcome<F> {
    let t = f.target();
    let fv = target_class(f, y, z, v);
    if !t.is_split_epi(y, z, &fv) {
        return Outcome::Holds(None);
    }
    if candidates.contains(&z) {
        if let Outcome::Holds(Some(w)) = split_epi(f, y, z, v) {
            let vp = w.morphism("v'").expect("split epi witness").coords.clone();
            return Outcome::Holds(Some(
                Witness::new("F(vv') is invertible")
                    .with_object(z)
                    .with_morphism(MorphismRef::source_side("v'", z, y, vp)),
            ));
        }
    }
    let mut tried = 0;
    for &yp in candidates {
        let sample = policy.elements(f.field(), f.catalog().hom_dim(yp, y), salt(yp, y, 2));
        for vp in &sample.elements {
            tried += 1;
            let fvp = f.map_class(yp, y, vp);
            let composite = t.compose(yp, y, z, &fv, &fvp);
            if t.is_iso(yp, z, &composite) {
                return Outcome::Holds(Some(
                    Witness::new("F(vv') is invertible")
                        .with_object(yp)
                        .with_morphism(MorphismRef::source_side("v'", yp, y, vp.clone())),
                ));
            }
        }
    }
    Outcome::Unknown(format!("no v' found among {tried} morphisms from {} candidate objects", candidates.len()))
}

/// (RSM): `F(u)` split mono implies `u` split mono.
pub fn check_rsm<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::ReflectsSplitMono, x, y, u, reflects_split_mono(f, x, y, u))
}

pub(crate) fn reflects_split_mono<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> Outcome<F> {
    let fu = target_class(f, x, y, u);
    if f.target().is_split_mono(x, y, &fu) && !f.source().is_split_mono(x, y, u) {
        fail_at("F(u) is a split mono, u is not".into(), x, y, u)
    } else {
        Outcome::Holds(None)
    }
}

/// (RSE): `F(v)` split epi implies `v` split epi.
pub fn check_rse<F: Field>(f: &TriangleFunctorModel<F>, y: usize, z: usize, v: &[F::Elem]) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::ReflectsSplitEpi, y, z, v, reflects_split_epi(f, y, z, v))
}

pub(crate) fn reflects_split_epi<F: Field>(f: &TriangleFunctorModel<F>, y: usize, z: usize, v: &[F::Elem]) -> Outcome<F> {
    let fv = target_class(f, y, z, v);
    if f.target().is_split_epi(y, z, &fv) && !f.source().is_split_epi(y, z, v) {
        Outcome::Fails(
            Witness::new("F(v) is a split epi, v is not").with_morphism(MorphismRef::source_side("v", y, z, v.to_vec())),
        )
    } else {
        Outcome::Holds(None)
    }
}

/// (RI): `F(u)` invertible implies `u` invertible.
pub fn check_ri<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> ConditionVerdict<F> {
    ConditionVerdict::pointwise(Condition::ReflectsIso, x, y, u, reflects_iso(f, x, y, u))
}

pub(crate) fn reflects_iso<F: Field>(f: &TriangleFunctorModel<F>, x: usize, y: usize, u: &[F::Elem]) -> Outcome<F> {
    let fu = target_class(f, x, y, u);
    if f.target().is_iso(x, y, &fu) && !f.source().is_iso(x, y, u) {
        fail_at("F(u) is invertible, u is not".into(), x, y, u)
    } else {
        Outcome::Holds(None)
    }
}

/// Injectivity of every Hom map.
pub fn is_faithful_on<F: Field>(f: &TriangleFunctorModel<F>) -> ConditionVerdict<F> {
    let cat = f.catalog();
    let outcomes = cat.pairs().map(|(x, y)| {
        let ker = f.hom_map(x, y).kernel_basis();
        match ker.basis().first() {
            Some(w) => Outcome::Fails(
                Witness::new("nonzero class sent to zero").with_morphism(MorphismRef::source_side("w", x, y, w.clone())),
            ),
            None => Outcome::Holds(None),
        }
    });
    exact(aggregate(Condition::Faithful, outcomes, true), cat.len())
}

/// Surjectivity of every Hom map.
pub fn is_full_on<F: Field>(f: &TriangleFunctorModel<F>) -> ConditionVerdict<F> {
    let cat = f.catalog();
    let outcomes = cat.pairs().map(|(x, y)| {
        let m = f.hom_map(x, y);
        let img = m.image_basis();
        if img.dim() == m.rows() {
            return Outcome::Holds(None);
        }
        let k = f.field();
        let missing = (0..m.rows())
            .map(|i| super::unit(k, m.rows(), i))
            .find(|e| !img.contains(e).expect("ambient"))
            .expect("proper image misses a unit vector");
        Outcome::Fails(
            Witness::new("class not in the image of F")
                .with_morphism(MorphismRef::target_side("g", x, y, missing)),
        )
    });
    exact(aggregate(Condition::Full, outcomes, true), cat.len())
}

/// `F(X) ≅ 0` implies `X ≅ 0` for every catalog object.
pub fn is_sincere_on<F: Field>(f: &TriangleFunctorModel<F>) -> ConditionVerdict<F> {
    let cat = f.catalog();
    let outcomes = (0..cat.len()).map(|x| {
        if f.target().is_zero_object(x) && !f.source().is_zero_object(x) {
            Outcome::Fails(Witness::new("nonzero object sent to zero").with_object(x))
        } else {
            Outcome::Holds(None)
        }
    });
    aggregate(Condition::Sincere, outcomes, true)
}

fn exact<F: Field>(mut v: ConditionVerdict<F>, n: usize) -> ConditionVerdict<F> {
    v.coverage = Coverage {
        morphisms_checked: n * n,
        exhaustive: true,
    };
    v
}

/// Checks the Hom maps against the chain-level action, identities,
/// composition of basis classes, naturality of `ξ`, and that cones go to cones.
pub fn functoriality_check<F: Field>(f: &TriangleFunctorModel<F>) -> ConditionVerdict<F> {
    let cat = f.catalog();
    let (src, tgt) = (f.source(), f.target());
    let k = f.field();
    let mut checked = 0;
    let fail = |detail: String, x: usize, y: usize, c: Vec<F::Elem>, checked: usize| {
        ConditionVerdict::aggregate(
            Condition::Functorial,
            Outcome::Fails(Witness::new(detail).with_morphism(MorphismRef::source_side("f", x, y, c))),
            Coverage {
                morphisms_checked: checked,
                exhaustive: true,
            },
        )
    };
    for (x, y) in cat.pairs() {
        let h = src.hom(x, y);
        for (b, rep) in h.basis().iter().enumerate() {
            checked += 1;
            let e = super::unit(k, h.dim(), b);
            let image = match f.apply_chain_map(rep, tgt.object(x), tgt.object(y)) {
                Ok(g) => g,
                Err(err) => return fail(format!("chain-level image failed: {err}"), x, y, e, checked),
            };
            let coords = tgt.hom(x, y).class_coords(&image).expect("image is a chain map");
            if coords != f.map_class(x, y, &e) {
                return fail("Hom map disagrees with the chain-level functor".into(), x, y, e, checked);
            }
            if let (Some(x1), Some(y1)) = (cat.shift_of(x), cat.shift_of(y)) {
                // ξ_Y ∘ F(f[1]) = F(f)[1] ∘ ξ_X
                let f1 = src.class_of(x1, y1, &rep.shift(1)).expect("shifted class");
                let lhs = tgt.compose(x1, y1, y1, f.xi(y).expect("xi"), &f.map_class(x1, y1, &f1));
                let ff1 = tgt.class_of(x1, y1, &image.shift(1)).expect("shifted image");
                let rhs = tgt.compose(x1, x1, y1, &ff1, f.xi(x).expect("xi"));
                if lhs != rhs {
                    return fail("xi is not natural".into(), x, y, e, checked);
                }
            }
            match (crate::homotopy::cone(rep), crate::homotopy::cone(&image)) {
                (Ok(c), Ok(fc)) => match f.apply_complex(&c.complex) {
                    Ok(img) if img == *fc.complex => {}
                    _ => return fail("image of a cone is not the cone of the image".into(), x, y, e, checked),
                },
                _ => return fail("cone construction failed".into(), x, y, e, checked),
            }
        }
        if x == y {
            let id = src.identity(x);
            if f.map_class(x, x, &id) != tgt.identity(x) {
                return fail("identity not preserved".into(), x, x, id, checked);
            }
        }
    }
    for x in 0..cat.len() {
        if let (Some(xi), Some(x1)) = (f.xi(x), cat.shift_of(x)) {
            if !tgt.is_iso(x1, x1, xi) {
                return fail("xi is not invertible".into(), x1, x1, xi.to_vec(), checked);
            }
        }
    }
    for x in 0..cat.len() {
        for y in 0..cat.len() {
            for z in 0..cat.len() {
                for a in 0..src.hom_dim(y, z) {
                    for b in 0..src.hom_dim(x, y) {
                        checked += 1;
                        let g = super::unit(k, src.hom_dim(y, z), a);
                        let h = super::unit(k, src.hom_dim(x, y), b);
                        let lhs = f.map_class(x, z, &src.compose(x, y, z, &g, &h));
                        let rhs = tgt.compose(x, y, z, &f.map_class(y, z, &g), &f.map_class(x, y, &h));
                        if lhs != rhs {
                            return fail(format!("composition through object {y} not preserved"), x, z, src.compose(x, y, z, &g, &h), checked);
                        }
                    }
                }
            }
        }
    }
    ConditionVerdict::aggregate(
        Condition::Functorial,
        Outcome::Holds(None),
        Coverage {
            morphisms_checked: checked,
            exhaustive: true,
        },
    )
}

pub(crate) fn salt(x: usize, y: usize, tag: u64) -> u64 {
    ((x as u64) << 32) ^ ((y as u64) << 8) ^ tag
}

/// Representative chain map of a class, for callers that want the morphism itself.
pub fn representative<F: Field>(f: &TriangleFunctorModel<F>, m: &MorphismRef<F>) -> ChainMap<F> {
    match m.side {
        super::Side::Source => f.source().hom(m.source, m.target).representative(&m.coords),
        super::Side::Target => f.target().hom(m.source, m.target).representative(&m.coords),
    }
}
