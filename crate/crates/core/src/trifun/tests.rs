use std::sync::Arc;

use super::*;
use crate::exactlin::Matrix;
use crate::field::{Field, PrimeField, Rationals};
use crate::homotopy::{BoundedComplex, HomSemantics};
use crate::quivrep::projective_module;
use crate::standard::{a2_derived_catalog, a3_derived_catalog, forget_arrows, killed_objects, truncation};

fn gf2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn verdict<F: Field>(r: &ConditionReport<F>, c: Condition) -> Status {
    r.status(c).unwrap()
}

#[test]
fn golden_catalog_hom_dims() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let i = |n: &str| cat.index(n).unwrap();
    assert_eq!(cat.len(), 6);
    assert_eq!(cat.hom_dim(i("S(b)"), i("S(a)[1]")), 1);
    assert_eq!(cat.hom_dim(i("S(a)"), i("P(b)")), 1);
    assert_eq!(cat.hom_dim(i("P(b)"), i("S(a)")), 0);
    assert_eq!(cat.hom_dim(i("S(b)"), i("P(b)")), 0);
    assert_eq!(cat.hom_dim(i("P(b)"), i("S(b)")), 1);
    assert_eq!(cat.shift_of(i("S(b)")), Some(i("S(b)[1]")));
    assert_eq!(cat.shift_of(i("S(b)[1]")), None);
}

fn golden<F: Field>(k: F) {
    let cat = a2_derived_catalog(k).unwrap();
    let f = forget_arrows(&cat).unwrap();
    let r = condition_report(&f, &SamplingPolicy::default());
    assert_eq!(r.violations().count(), 0);
    for c in [Condition::Functorial, Condition::Sincere, Condition::IsoLifting, Condition::ReflectsIso] {
        assert_eq!(verdict(&r, c), Status::Holds, "{c}");
    }
    for c in [Condition::Faithful, Condition::SplitMono, Condition::SplitEpi, Condition::ReflectsSplitMono] {
        assert_eq!(verdict(&r, c), Status::Fails, "{c}");
    }
    let (sa, pb, sb, sa1) = (cat.index("S(a)").unwrap(), cat.index("P(b)").unwrap(), cat.index("S(b)").unwrap(), cat.index("S(a)[1]").unwrap());
    let w = r.verdict(Condition::Faithful).unwrap().outcome.witness().unwrap().morphism("w").unwrap().clone();
    assert_eq!((w.source, w.target), (sb, sa1));
    assert!(f.map_class(sb, sa1, &w.coords).iter().all(|e| k.is_zero(e)));
    let u = r.verdict(Condition::SplitMono).unwrap().outcome.witness().unwrap().morphism("u").unwrap().clone();
    assert_eq!((u.source, u.target), (sa, pb));
    let v = r.verdict(Condition::SplitEpi).unwrap().outcome.witness().unwrap().morphism("v").unwrap().clone();
    assert_eq!((v.source, v.target), (pb, sb));
    assert!(killed_objects(&f).is_empty());
}

#[test]
fn golden_forgetful_functor_over_gf2() {
    golden(gf2());
}

#[test]
fn golden_forgetful_functor_over_rationals() {
    golden(Rationals);
}

#[test]
fn identity_functor_satisfies_everything() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let f = TriangleFunctorModel::identity(&cat).unwrap();
    let r = condition_report(&f, &SamplingPolicy::default());
    for v in &r.verdicts {
        assert_eq!(v.status(), Status::Holds, "{}", v.condition);
    }
    assert!(r.implications.iter().all(|(_, s)| *s != ImplicationStatus::Violated));
}

#[test]
fn zero_functor_is_full_but_not_sincere() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let f = TriangleFunctorModel::zero(&cat).unwrap();
    let r = condition_report(&f, &SamplingPolicy::default());
    assert_eq!(verdict(&r, Condition::Full), Status::Holds);
    assert_eq!(verdict(&r, Condition::SplitMono), Status::Holds);
    assert_eq!(verdict(&r, Condition::Sincere), Status::Fails);
    assert_eq!(verdict(&r, Condition::ReflectsIso), Status::Fails);
    assert_eq!(r.violations().count(), 0);
}

#[test]
fn truncation_kills_simple_b_and_fails_split_mono() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let f = truncation(&cat, &["a"]).unwrap();
    assert_eq!(killed_objects(&f), vec![cat.index("S(b)").unwrap(), cat.index("S(b)[1]").unwrap()]);
    let r = condition_report(&f, &SamplingPolicy::default());
    assert_eq!(verdict(&r, Condition::Functorial), Status::Holds);
    assert_eq!(verdict(&r, Condition::Sincere), Status::Fails);
    assert_eq!(verdict(&r, Condition::SplitMono), Status::Fails);
    assert_eq!(verdict(&r, Condition::SplitEpi), Status::Fails);
    assert_eq!(verdict(&r, Condition::IsoLifting), Status::Fails);
    assert_eq!(r.violations().count(), 0);
}

/// Without `S(b)` the only killed class is gone, so the functor is faithful
/// on the catalog while (SM) still fails: faithfulness gives (SM) only
/// through cones.
#[test]
fn faithful_without_split_mono_off_cone_closed_catalogs() {
    let q = crate::standard::a2();
    let k = gf2();
    let objs = ["a", "b"]
        .iter()
        .map(|v| {
            let m = if *v == "a" {
                crate::quivrep::simple_module(&q, k, "a").unwrap()
            } else {
                projective_module(&q, k, "b").unwrap()
            };
            let name = if *v == "a" { "S(a)" } else { "P(b)" };
            (name.to_string(), Arc::new(BoundedComplex::resolve(&Arc::new(m)).unwrap()))
        })
        .collect();
    let cat = Arc::new(MorphismCatalog::with_shifts(k, objs, 0..=1, HomSemantics::Derived).unwrap());
    let f = forget_arrows(&cat).unwrap();
    let r = condition_report(&f, &SamplingPolicy::default());
    assert_eq!(verdict(&r, Condition::Faithful), Status::Holds);
    assert_eq!(verdict(&r, Condition::SplitMono), Status::Fails);
    assert_eq!(r.violations().count(), 0);
    let imp = r.implications.iter().find(|(i, _)| i.label() == "faithful => SM").unwrap();
    assert_eq!(imp.1, ImplicationStatus::NotApplicable);
    let declared = Arc::new(
        MorphismCatalog::with_shifts(k, cat.names()[..2].iter().cloned().zip(cat.category().objects()[..2].iter().cloned()).collect(), 0..=1, HomSemantics::Derived)
            .unwrap()
            .declare_cone_closed(true),
    );
    let r = condition_report(&forget_arrows(&declared).unwrap(), &SamplingPolicy::default());
    assert!(r.violations().any(|i| i.label() == "faithful => SM"));
}

#[test]
fn corrupted_hom_map_is_caught() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let mut f = TriangleFunctorModel::identity(&cat).unwrap();
    let pb = cat.index("P(b)").unwrap();
    let shape = f.hom_map(pb, pb).shape();
    f.override_hom_map(pb, pb, Matrix::zeros(gf2(), shape.0, shape.1)).unwrap();
    let v = functoriality_check(&f);
    assert!(v.fails());
    let m = &v.outcome.witness().unwrap().morphisms[0];
    assert_eq!((m.source, m.target), (pb, pb));
}

#[test]
fn iso_lifting_negative_control() {
    let k = gf2();
    let q = crate::standard::a2();
    let pb = Arc::new(BoundedComplex::stalk(Arc::new(projective_module(&q, k, "b").unwrap()), 0));
    let cat = Arc::new(
        MorphismCatalog::new(k, vec![("P".into(), pb.clone()), ("P'".into(), pb)], HomSemantics::Homotopy).unwrap(),
    );
    let mut f = TriangleFunctorModel::identity(&cat).unwrap();
    let u = cat.category().identity(0);
    assert!(check_i(&f, 0, 1, &u).holds());
    f.override_hom_map(1, 0, Matrix::zeros(k, 1, 1)).unwrap();
    let v = check_i(&f, 0, 1, &u);
    assert!(v.fails());
    assert!(v.outcome.witness().unwrap().morphism("u").is_some());
}

#[test]
fn split_mono_witness_is_a_weak_witness() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let f = TriangleFunctorModel::identity(&cat).unwrap();
    let (sb, sa1) = (cat.index("S(b)").unwrap(), cat.index("S(a)[1]").unwrap());
    let pb = cat.index("P(b)").unwrap();
    let sa = cat.index("S(a)").unwrap();
    let u = vec![gf2().one()];
    assert!(check_sm(&f, sa, pb, &u).holds());
    let w = check_wsm(&f, sa, pb, &u, &[sa], &SamplingPolicy::default());
    assert!(w.holds());
    let zero = vec![gf2().zero()];
    assert!(check_sm(&f, sb, sa1, &zero).holds());
}

#[test]
fn forgetful_weak_split_mono_search_is_undecided() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let f = forget_arrows(&cat).unwrap();
    let (sa, pb) = (cat.index("S(a)").unwrap(), cat.index("P(b)").unwrap());
    let all: Vec<usize> = (0..cat.len()).collect();
    let v = check_wsm(&f, sa, pb, &[gf2().one()], &all, &SamplingPolicy::default());
    assert!(v.outcome.is_unknown());
}

#[test]
fn reports_are_deterministic() {
    let cat = a2_derived_catalog(Rationals).unwrap();
    let f = forget_arrows(&cat).unwrap();
    let p = SamplingPolicy::with_seed(42);
    let a = condition_report(&f, &p);
    let b = condition_report(&f, &p);
    assert_eq!(a.verdicts, b.verdicts);
}

#[test]
fn a3_truncations_respect_implications() {
    let cat = a3_derived_catalog(gf2()).unwrap();
    for keep in [&["a"][..], &["b"], &["a", "b"], &["b", "c"]] {
        let f = truncation(&cat, keep).unwrap();
        let r = condition_report(&f, &SamplingPolicy::default());
        assert_eq!(verdict(&r, Condition::Functorial), Status::Holds);
        assert_eq!(r.violations().count(), 0, "{keep:?}");
        assert_eq!(verdict(&r, Condition::SplitMono), verdict(&r, Condition::SplitEpi));
    }
}
