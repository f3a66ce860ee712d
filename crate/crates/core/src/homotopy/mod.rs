//! Bounded complexes of representations up to homotopy.
//!
//! Cohomological grading: `d_i: C^i → C^{i+1}`. Shift: `C[n]^i = C^{i+n}`
//! with differential `(-1)^n d`; chain maps shift without sign.

mod category;
mod chain_map;
mod complex;
mod hom;
mod triangle;

pub use category::{
    is_homotopy_equivalence, is_null_homotopic, is_split_epi, is_split_mono, is_zero_object, FiniteSubcategory,
};
pub use chain_map::ChainMap;
pub use complex::{complex_direct_sum, BoundedComplex, ComplexBiproduct};
pub use hom::{check_semantics, homotopy_hom, HomSemantics, HomotopyHomSpace};
pub use triangle::{cone, cone_triangle, complete_triangle_morphism, realize_connecting, realized_comparison, Cone, Triangle};

pub(crate) use category::unit;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::{Field, PrimeField, Rationals};
    use crate::quivrep::{hom_space, projective_module, simple_module, ExactFunctorModel, Quiver};

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::linear(&["a", "b"]).unwrap())
    }

    struct A2<F: Field> {
        sa: Arc<BoundedComplex<F>>,
        pb: Arc<BoundedComplex<F>>,
        sb: Arc<BoundedComplex<F>>,
    }

    fn a2_objects<F: Field>(k: F) -> A2<F> {
        let q = a2();
        let sa = Arc::new(BoundedComplex::stalk(Arc::new(simple_module(&q, k, "a").unwrap()), 0));
        let pb = Arc::new(BoundedComplex::stalk(Arc::new(projective_module(&q, k, "b").unwrap()), 0));
        let sb = Arc::new(BoundedComplex::resolve(&Arc::new(simple_module(&q, k, "b").unwrap())).unwrap());
        A2 { sa, pb, sb }
    }

    #[test]
    fn ext_between_simples_is_one_dimensional() {
        for_both(|k| {
            let o = a2_objects(k);
            let sa1 = Arc::new(o.sa.shift(1));
            let h = homotopy_hom(&o.sb, &sa1, HomSemantics::Derived).unwrap();
            assert_eq!(h.dim(), 1);
            let h = homotopy_hom(&o.sa, &o.pb, HomSemantics::Derived).unwrap();
            assert_eq!(h.dim(), 1);
            let h = homotopy_hom(&o.pb, &o.sa, HomSemantics::Derived).unwrap();
            assert_eq!(h.dim(), 0);
            let h = homotopy_hom(&o.sb, &o.pb, HomSemantics::Derived).unwrap();
            assert_eq!(h.dim(), 0);
            let h = homotopy_hom(&o.pb, &o.sb, HomSemantics::Derived).unwrap();
            assert_eq!(h.dim(), 1);
        });
    }

    fn for_both(f: impl Fn(PrimeField)) {
        f(PrimeField::new(2).unwrap());
        f(PrimeField::new(3).unwrap());
    }

    #[test]
    fn semisimple_target_has_no_extensions() {
        let q = a2();
        let k = Rationals;
        let e = ExactFunctorModel::arrow_restriction(&q, &[]).unwrap();
        let b = e.target().clone();
        let sa = Arc::new(BoundedComplex::stalk(Arc::new(simple_module(&b, k.clone(), "a").unwrap()), 0));
        let sb = Arc::new(BoundedComplex::stalk(Arc::new(simple_module(&b, k.clone(), "b").unwrap()), 0));
        let h = homotopy_hom(&sb, &Arc::new(sa.shift(1)), HomSemantics::Derived).unwrap();
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn derived_semantics_rejects_non_projective_terms() {
        let q = a2();
        let k = Rationals;
        let sb = Arc::new(BoundedComplex::stalk(Arc::new(simple_module(&q, k.clone(), "b").unwrap()), 0));
        assert!(matches!(
            homotopy_hom(&sb, &sb, HomSemantics::Derived),
            Err(crate::Error::DerivedSemantics(_))
        ));
        assert_eq!(homotopy_hom(&sb, &sb, HomSemantics::Homotopy).unwrap().dim(), 1);
    }

    #[test]
    fn shifts_round_trip() {
        let o = a2_objects(Rationals);
        assert_eq!(o.sb.shift(0), *o.sb);
        assert_eq!(o.sb.shift(1).shift(-1), *o.sb);
        assert_eq!(o.sa.shift(2).lo(), -2);
        assert_ne!(o.sb.shift(1).differential(-2), o.sb.differential(-1));
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let o = a2_objects(Rationals);
        for c in [&o.sa, &o.pb, &o.sb] {
            let id = ChainMap::identity(c);
            let cn = cone(&id).unwrap();
            assert!(!cn.complex.is_zero_complex());
            assert!(is_zero_object(&cn.complex).unwrap());
        }
        assert!(!is_zero_object(&o.sa).unwrap());
    }

    #[test]
    fn cone_of_projective_inclusion_resolves_simple_b() {
        let q = a2();
        let k = Rationals;
        let pa = Arc::new(BoundedComplex::stalk(Arc::new(projective_module(&q, k.clone(), "a").unwrap()), 0));
        let pb = Arc::new(BoundedComplex::stalk(Arc::new(projective_module(&q, k.clone(), "b").unwrap()), 0));
        let f = homotopy_hom(&pa, &pb, HomSemantics::Derived).unwrap().basis()[0].clone();
        let cn = cone(&f).unwrap();
        let h: Vec<_> = cn.complex.cohomology_dims().into_iter().filter(|(_, d)| d.iter().any(|&x| x > 0)).collect();
        assert_eq!(h, vec![(0, vec![0, 1])]);
    }

    #[test]
    fn cone_of_zero_map_is_a_direct_sum() {
        let o = a2_objects(Rationals);
        let z = ChainMap::zero(&o.sb, &o.pb);
        let cn = cone(&z).unwrap();
        let sum = complex_direct_sum(&[Arc::new(o.sb.shift(1)), o.pb.clone()]).unwrap();
        assert_eq!(*cn.complex, *sum.object);
    }

    #[test]
    fn split_mono_detection() {
        let o = a2_objects(Rationals);
        let u = homotopy_hom(&o.sa, &o.pb, HomSemantics::Derived).unwrap().basis()[0].clone();
        assert!(!is_split_mono(&u, HomSemantics::Derived).unwrap());
        assert!(is_split_mono(&ChainMap::identity(&o.pb), HomSemantics::Derived).unwrap());
        let sum = complex_direct_sum(&[o.sa.clone(), o.pb.clone()]).unwrap();
        assert!(is_split_mono(&sum.inclusions[0], HomSemantics::Derived).unwrap());
        assert!(is_split_epi(&sum.projections[1], HomSemantics::Derived).unwrap());
        assert!(!is_split_epi(&u, HomSemantics::Derived).unwrap());
    }

    #[test]
    fn triangle_of_simples_has_projective_middle_term() {
        let o = a2_objects(Rationals);
        let sa1 = Arc::new(o.sa.shift(1));
        let w = homotopy_hom(&o.sb, &sa1, HomSemantics::Derived).unwrap().basis()[0].clone();
        let t = realize_connecting(&w).unwrap();
        let cat = FiniteSubcategory::new(Rationals, vec![t.y.clone(), o.pb.clone()], HomSemantics::Derived).unwrap();
        let isos = (0..cat.hom_dim(0, 1)).any(|i| {
            let e = unit(Rationals, cat.hom_dim(0, 1), i);
            cat.is_iso(0, 1, &e)
        });
        assert!(isos);
        assert_eq!(t.w, w);
        let (c, phi) = realized_comparison(&t).unwrap();
        assert_eq!(c.projection.compose(&phi).unwrap().with_endpoints(w.source().clone(), w.target().clone()).unwrap(), w);
        assert!(is_homotopy_equivalence(&phi, HomSemantics::Derived).unwrap());
    }

    #[test]
    fn realize_zero_connecting_map_gives_direct_sum() {
        let o = a2_objects(Rationals);
        let w = ChainMap::zero(&o.sb, &Arc::new(o.pb.shift(1)));
        let t = realize_connecting(&w).unwrap();
        let sum = complex_direct_sum(&[o.sb.clone(), o.pb.clone()]).unwrap();
        assert_eq!(*t.y, *sum.object);
        assert!(is_split_mono(&t.u, HomSemantics::Derived).unwrap());
    }

    #[test]
    fn realize_identity_connecting_map_gives_zero() {
        let o = a2_objects(Rationals);
        let x1 = Arc::new(o.sb.shift(1));
        let t = realize_connecting(&ChainMap::identity(&x1)).unwrap();
        assert!(is_zero_object(&t.y).unwrap());
    }

    #[test]
    fn triangle_morphism_completion() {
        let o = a2_objects(Rationals);
        let u = homotopy_hom(&o.sa, &o.pb, HomSemantics::Derived).unwrap().basis()[0].clone();
        let t = cone_triangle(&u).unwrap();
        let g = complete_triangle_morphism(&t, &t, &ChainMap::identity(&o.sa), &ChainMap::identity(&o.pb)).unwrap();
        assert_eq!(g, ChainMap::identity(&t.z));
        let g = complete_triangle_morphism(&t, &t, &ChainMap::zero(&o.sa, &o.sa), &ChainMap::zero(&o.pb, &o.pb)).unwrap();
        assert!(g.is_zero());
        let bad = complete_triangle_morphism(&t, &t, &ChainMap::identity(&o.sa), &ChainMap::zero(&o.pb, &o.pb));
        assert_eq!(bad.unwrap_err(), crate::Error::NotStrictlyCommuting);
    }

    #[test]
    fn hom_space_dims_agree_with_module_hom_for_stalks() {
        let q = a2();
        let k = PrimeField::new(5).unwrap();
        let pb = Arc::new(projective_module(&q, k, "b").unwrap());
        let sb = Arc::new(simple_module(&q, k, "b").unwrap());
        let c = Arc::new(BoundedComplex::stalk(pb.clone(), 3));
        let d = Arc::new(BoundedComplex::stalk(sb.clone(), 3));
        let h = homotopy_hom(&c, &d, HomSemantics::Homotopy).unwrap();
        assert_eq!(h.dim(), hom_space(&pb, &sb).unwrap().dim());
        for f in h.basis() {
            assert_eq!(h.class_coords(&f).unwrap().len(), 1);
        }
    }
}
