use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricat_core::homotopy::{BoundedComplex, HomSemantics};
use tricat_core::quivrep::image_factorization;
use tricat_core::random::verdier_instance;
use tricat_core::standard::{
    a2_derived_catalog, a2_module_catalog, a3_derived_catalog, a3_module_catalog, forget_arrows, killed_objects,
    truncation,
};
use tricat_core::trifun::{MorphismCatalog, SamplingPolicy, TriangleFunctorModel};
use tricat_core::verdict::{
    build_ideal_table, factor_through_kernel, fitting_inverse_witness, ideal_is_two_sided, objectivity_verdict,
    FactorizationOutcome, IdealKind,
};
use tricat_core::PrimeField;

fn gf2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn functors(cat: &Arc<MorphismCatalog<PrimeField>>) -> Vec<TriangleFunctorModel<PrimeField>> {
    let mut out = vec![
        TriangleFunctorModel::identity(cat).unwrap(),
        TriangleFunctorModel::zero(cat).unwrap(),
        forget_arrows(cat).unwrap(),
    ];
    for keep in [&["a"][..], &["b"], &["a", "b"]] {
        if let Ok(f) = truncation(cat, keep) {
            out.push(f);
        }
    }
    out
}

#[test]
fn ideals_are_nested_and_two_sided() {
    for cat in [a2_derived_catalog(gf2()).unwrap(), a3_derived_catalog(gf2()).unwrap()] {
        for f in functors(&cat) {
            let t = build_ideal_table(&f, &killed_objects(&f)).unwrap();
            for (x, y) in cat.pairs() {
                assert!(t.gen(x, y).is_subspace_of(t.ker(x, y)).unwrap());
            }
            assert!(ideal_is_two_sided(&t, IdealKind::Kernel).is_none(), "{}", f.name());
            assert!(ideal_is_two_sided(&t, IdealKind::Generated).is_none(), "{}", f.name());
        }
    }
}

/// Every killed class `Z → X[1]` of every functor, pushed through the factorization search.
#[test]
fn factorizations_recompose_and_land_in_the_generated_ideal() {
    let cat = a2_derived_catalog(gf2()).unwrap();
    let all: Vec<usize> = (0..cat.len()).collect();
    let policy = SamplingPolicy::default();
    for f in functors(&cat) {
        for (z, x) in cat.pairs() {
            let Some(x1) = cat.shift_of(x) else { continue };
            let hom = cat.category().hom(z, x1);
            for coords in policy.elements(gf2(), hom.dim(), 0).elements {
                if f.map_class(z, x1, &coords).iter().any(|e| *e != 0) {
                    continue;
                }
                let w = hom.representative(&coords);
                match factor_through_kernel(&f, &w, &all, &policy).unwrap() {
                    FactorizationOutcome::Factored(k) => {
                        assert!(k.certified);
                        assert_eq!(cat.category().class_of(z, x1, &k.h.compose(&k.g).unwrap()).unwrap(), coords);
                        // with K listed, w lies in the generated ideal
                        let mut objects: Vec<(String, Arc<BoundedComplex<PrimeField>>)> =
                            cat.names().iter().cloned().zip(cat.category().objects().iter().cloned()).collect();
                        objects.push(("K".into(), k.kernel.clone()));
                        let ext = Arc::new(MorphismCatalog::new(gf2(), objects, cat.semantics()).unwrap());
                        let g = rebuild(&f, &ext);
                        let t = build_ideal_table(&g, &[cat.len()]).unwrap();
                        assert!(t.gen(z, x1).contains(&coords).unwrap());
                    }
                    FactorizationOutcome::Exhausted { .. } => {
                        let t = build_ideal_table(&f, &killed_objects(&f)).unwrap();
                        assert!(!t.gen(z, x1).contains(&coords).unwrap(), "{}", f.name());
                    }
                }
            }
        }
    }
}

fn rebuild(
    f: &TriangleFunctorModel<PrimeField>,
    cat: &Arc<MorphismCatalog<PrimeField>>,
) -> TriangleFunctorModel<PrimeField> {
    match f.action() {
        tricat_core::trifun::ChainAction::Identity => TriangleFunctorModel::identity(cat).unwrap(),
        tricat_core::trifun::ChainAction::Zero => TriangleFunctorModel::zero(cat).unwrap(),
        tricat_core::trifun::ChainAction::Termwise(e) => TriangleFunctorModel::induce_termwise(e, cat).unwrap(),
    }
}

#[test]
fn module_level_truncation_is_objective_with_image_oracle() {
    let policy = SamplingPolicy::default();
    for cat in [a2_module_catalog(gf2()).unwrap(), a3_module_catalog(gf2()).unwrap()] {
        let q = cat.object(0).quiver().clone();
        let keeps: Vec<Vec<&str>> = if q.vertex_count() == 2 {
            vec![vec!["a"], vec!["b"]]
        } else {
            vec![vec!["a"], vec!["b"], vec!["c"], vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]]
        };
        for keep in keeps {
            let f = truncation(&cat, &keep).unwrap();
            let table = build_ideal_table(&f, &killed_objects(&f)).unwrap();
            assert!(objectivity_verdict(&table).holds(), "{keep:?}");
            let e = match f.action() {
                tricat_core::trifun::ChainAction::Termwise(e) => e.clone(),
                _ => unreachable!(),
            };
            for (x, y) in cat.pairs() {
                let hom = cat.category().hom(x, y);
                for c in policy.elements(gf2(), hom.dim(), 0).elements {
                    if f.map_class(x, y, &c).iter().any(|v| *v != 0) {
                        continue;
                    }
                    let m = hom.representative(&c).component(0);
                    let im = image_factorization(&m).unwrap();
                    assert!(e.apply_module(&im.image).unwrap().is_zero());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inverse_witnesses_recompose_to_the_identity(seed in any::<u64>()) {
        let k = gf2();
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let base = a2_derived_catalog(k).unwrap();
        let pick = |names: &[&str], r: &mut ChaCha8Rng| {
            let n = r.random_range(1..=2);
            (0..n).map(|_| base.object(base.index(names[r.random_range(0..names.len())]).unwrap()).clone()).collect::<Vec<_>>()
        };
        let xs = pick(&["S(a)", "P(b)", "S(b)", "S(a)[1]", "P(b)[1]"], &mut r);
        let ks = pick(&["S(b)", "S(b)[1]"], &mut r);
        let inst = verdier_instance(k, &xs, &ks, |c| truncation(c, &["a"]), HomSemantics::Derived, &mut r).unwrap();
        let wit = fitting_inverse_witness(&inst.functor, 0, 1, &inst.s).unwrap();
        prop_assert!(wit.verified);
        let ms = inst.catalog.category().compose(0, 1, 0, &wit.m_class, &inst.s);
        prop_assert_eq!(inst.functor.map_class(0, 0, &ms), inst.functor.target().identity(0));
    }
}
