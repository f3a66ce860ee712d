//! Quiver representations over a field: modules, morphisms, Hom spaces,
//! projective resolutions and exact restriction functors.

mod functor;
mod image;
mod morphism;
mod quiver;
mod representation;
mod resolution;

pub use functor::{apply_exact_functor, ExactFunctorKind, ExactFunctorModel};
pub use image::{image_factorization, kernel_of, subrepresentation, ImageFactorization};
pub use morphism::{compose, hom_space, HomSpace, ModuleMorphism};
pub use quiver::{Arrow, Path, Quiver};
pub use representation::{direct_sum, projective_module, simple_module, Biproduct, Representation};
pub use resolution::{is_projective, projective_cover, projective_resolution, ProjectiveCover, ProjectiveResolution};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactlin::Matrix;
    use crate::field::{PrimeField, Rationals};

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::linear(&["a", "b"]).unwrap())
    }

    fn a3() -> Arc<Quiver> {
        Arc::new(Quiver::linear(&["a", "b", "c"]).unwrap())
    }

    #[test]
    fn a2_projectives_and_simples() {
        let q = a2();
        let k = Rationals;
        let pa = projective_module(&q, k.clone(), "a").unwrap();
        let sa = simple_module(&q, k.clone(), "a").unwrap();
        assert_eq!(pa, sa);
        let pb = projective_module(&q, k.clone(), "b").unwrap();
        assert_eq!(pb.dims(), &[1, 1]);
        assert!(!pb.map(0).is_zero());
    }

    #[test]
    fn a2_hom_dimensions() {
        let q = a2();
        let k = Rationals;
        let sa = Arc::new(simple_module(&q, k.clone(), "a").unwrap());
        let sb = Arc::new(simple_module(&q, k.clone(), "b").unwrap());
        let pb = Arc::new(projective_module(&q, k.clone(), "b").unwrap());
        assert_eq!(hom_space(&sa, &pb).unwrap().dim(), 1);
        assert_eq!(hom_space(&pb, &sa).unwrap().dim(), 0);
        assert_eq!(hom_space(&pb, &sb).unwrap().dim(), 1);
        assert_eq!(hom_space(&sb, &pb).unwrap().dim(), 0);
        assert_eq!(hom_space(&pb, &pb).unwrap().dim(), 1);
    }

    #[test]
    fn hom_basis_elements_intertwine_and_round_trip() {
        let q = a3();
        let k = PrimeField::new(5).unwrap();
        let pc = Arc::new(Representation::projective(q.clone(), k, 2));
        let parts = [pc.clone(), Arc::new(Representation::projective(q.clone(), k, 1))];
        let sum = direct_sum(&parts).unwrap();
        let h = hom_space(&sum.object, &sum.object).unwrap();
        // End(P(c) ⊕ P(b)) = k ⊕ k ⊕ Hom(P(b), P(c)) = 3
        assert_eq!(h.dim(), 3);
        for (i, f) in h.basis().iter().enumerate() {
            assert!(f.is_intertwining());
            let c = h.coords(f);
            for (j, x) in c.iter().enumerate() {
                assert_eq!(*x, if i == j { 1 } else { 0 });
            }
        }
    }

    #[test]
    fn resolution_of_simple_b() {
        let q = a2();
        let k = Rationals;
        let sb = Arc::new(simple_module(&q, k.clone(), "b").unwrap());
        let r = projective_resolution(&sb).unwrap();
        assert_eq!(r.p0.summands, vec![1]);
        assert_eq!(r.p1_summands, vec![0]);
        assert!(r.differential.is_injective());
        assert!(r.p0.map.is_surjective());
        assert!(r.p0.map.compose(&r.differential).unwrap().is_zero());
        assert!(!is_projective(&sb).unwrap());
        let pb = Arc::new(projective_module(&q, k, "b").unwrap());
        assert!(is_projective(&pb).unwrap());
    }

    #[test]
    fn resolution_on_a3_of_injective_top() {
        let q = a3();
        let k = Rationals;
        // I(a): dims (1,1,1) with identity arrows is P(c); take S(b) ⊕ S(c) style: dims (0,1,1)
        let m = Arc::new(
            Representation::new(
                q.clone(),
                k.clone(),
                vec![0, 1, 1],
                vec![Matrix::zeros(k.clone(), 0, 1), Matrix::from_i64(k.clone(), &[&[1]])],
            )
            .unwrap(),
        );
        let r = projective_resolution(&m).unwrap();
        assert_eq!(r.p0.summands, vec![2]);
        assert_eq!(r.p1_summands, vec![0]);
    }

    #[test]
    fn image_and_kernel() {
        let q = a2();
        let k = Rationals;
        let sa = Arc::new(simple_module(&q, k.clone(), "a").unwrap());
        let pb = Arc::new(projective_module(&q, k.clone(), "b").unwrap());
        let u = hom_space(&sa, &pb).unwrap().basis()[0].clone();
        let fac = image_factorization(&u).unwrap();
        assert_eq!(fac.image.dims(), &[1, 0]);
        assert_eq!(fac.mono.compose(&fac.epi).unwrap(), u);
        let p = hom_space(&pb, &Arc::new(simple_module(&q, k, "b").unwrap())).unwrap().basis()[0].clone();
        let (ker, _) = kernel_of(&p).unwrap();
        assert_eq!(*ker, *sa);
    }

    #[test]
    fn functors_on_a2() {
        let q = a2();
        let k = Rationals;
        let pb = projective_module(&q, k.clone(), "b").unwrap();
        let trunc = ExactFunctorModel::vertex_truncation(&q, &["a"]).unwrap();
        let img = trunc.apply_module(&pb).unwrap();
        assert_eq!(img.dims(), &[1]);
        assert!(img.quiver().is_semisimple());
        let forget = ExactFunctorModel::arrow_restriction(&q, &[]).unwrap();
        let img = forget.apply_module(&pb).unwrap();
        assert_eq!(img.dims(), &[1, 1]);
        assert!(trunc.kills_support(&[0, 1]));
        assert!(!trunc.kills_support(&[1, 0]));
        let id = ExactFunctorModel::identity(&q);
        assert_eq!(id.apply_module(&pb).unwrap(), pb);
    }
}
