use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tricat_core::exactlin::Matrix;
use tricat_core::quivrep::{
    hom_space, image_factorization, kernel_of, projective_resolution, ExactFunctorModel, Representation,
};
use tricat_core::random::{random_matrix, random_module_morphism, random_representation, random_vector};
use tricat_core::standard::{a2, a3};
use tricat_core::{Field, PrimeField};

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn quiver(pick: u8) -> Arc<tricat_core::quivrep::Quiver> {
    if pick % 2 == 0 { a2() } else { a3() }
}

fn random_invertible(k: PrimeField, n: usize, r: &mut ChaCha8Rng) -> Matrix<PrimeField> {
    loop {
        let g = random_matrix(k, n, n, r);
        if g.inverse().is_some() {
            return g;
        }
    }
}

/// The same module written in another basis at every vertex.
fn rebase(m: &Representation<PrimeField>, r: &mut ChaCha8Rng) -> Representation<PrimeField> {
    let k = m.field();
    let q = m.quiver();
    let g: Vec<_> = (0..q.vertex_count()).map(|v| random_invertible(k, m.dim(v), r)).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| &(&g[a.target] * m.map(i)) * &g[a.source].inverse().unwrap())
        .collect();
    Representation::new(q.clone(), k, m.dims().to_vec(), maps).unwrap()
}

/// `0 → A --f--> B --g--> C → 0` is exact.
fn vertexwise_exact(f: &Matrix<PrimeField>, g: &Matrix<PrimeField>) -> bool {
    (g * f).is_zero() && f.rank() == f.cols() && g.rank() == g.rows() && f.rank() + g.rank() == f.rows()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_morphisms_intertwine(seed in any::<u64>(), pick in any::<u8>()) {
        let k = gf(3);
        let mut r = rng(seed);
        let q = quiver(pick);
        let m = Arc::new(random_representation(&q, k, 3, &mut r));
        let n = Arc::new(random_representation(&q, k, 3, &mut r));
        let f = random_module_morphism(&m, &n, &mut r).unwrap();
        prop_assert!(f.is_intertwining());
        let im = image_factorization(&f).unwrap();
        prop_assert!(im.epi.is_intertwining() && im.mono.is_intertwining());
        prop_assert_eq!(im.mono.compose(&im.epi).unwrap(), f.clone());
        let (_, inc) = kernel_of(&f).unwrap();
        prop_assert!(inc.is_intertwining());
        prop_assert!(f.compose(&inc).unwrap().is_zero());
        for b in hom_space(&m, &n).unwrap().basis() {
            prop_assert!(b.is_intertwining());
        }
    }

    #[test]
    fn hom_dimension_is_basis_independent(seed in any::<u64>(), pick in any::<u8>()) {
        let k = gf(2);
        let mut r = rng(seed);
        let q = quiver(pick);
        let m = random_representation(&q, k, 3, &mut r);
        let n = random_representation(&q, k, 3, &mut r);
        let d = hom_space(&Arc::new(m.clone()), &Arc::new(n.clone())).unwrap().dim();
        let d2 = hom_space(&Arc::new(rebase(&m, &mut r)), &Arc::new(rebase(&n, &mut r))).unwrap().dim();
        prop_assert_eq!(d, d2);
    }

    #[test]
    fn exact_functors_preserve_short_exact_sequences(seed in any::<u64>(), pick in 0u8..4) {
        let k = gf(3);
        let mut r = rng(seed);
        let q = a3();
        let e = match pick {
            0 => ExactFunctorModel::arrow_restriction(&q, &[]).unwrap(),
            1 => ExactFunctorModel::arrow_restriction(&q, &["cb"]).unwrap(),
            2 => ExactFunctorModel::vertex_truncation(&q, &["a", "c"]).unwrap(),
            _ => ExactFunctorModel::vertex_truncation(&q, &["b"]).unwrap(),
        };
        let m = Arc::new(random_representation(&q, k, 3, &mut r));
        let n = Arc::new(random_representation(&q, k, 3, &mut r));
        let f = random_module_morphism(&m, &n, &mut r).unwrap();
        let (_, inc) = kernel_of(&f).unwrap();
        let im = image_factorization(&f).unwrap();
        let (ei, ep) = (e.apply_morphism(&inc).unwrap(), e.apply_morphism(&im.epi).unwrap());
        for v in 0..e.target().vertex_count() {
            prop_assert!(vertexwise_exact(ei.map(v), ep.map(v)));
        }
    }

    #[test]
    fn resolutions_are_quasi_isomorphic(seed in any::<u64>(), pick in any::<u8>()) {
        let k = gf(2);
        let mut r = rng(seed);
        let q = quiver(pick);
        let m = Arc::new(random_representation(&q, k, 3, &mut r));
        let res = projective_resolution(&m).unwrap();
        prop_assert!(res.differential.is_injective());
        prop_assert!(res.p0.map.is_surjective());
        prop_assert!(res.p0.map.compose(&res.differential).unwrap().is_zero());
        for v in 0..q.vertex_count() {
            prop_assert_eq!(res.p0.cover.dim(v) - res.p1.dim(v), m.dim(v));
        }
    }

    #[test]
    fn truncation_kills_the_image_of_killed_maps(seed in any::<u64>(), pick in 0u8..3) {
        let k = gf(2);
        let mut r = rng(seed);
        let q = a3();
        let keep: &[&str] = match pick { 0 => &["a"], 1 => &["b"], _ => &["a", "c"] };
        let e = ExactFunctorModel::vertex_truncation(&q, keep).unwrap();
        let kept: Vec<usize> = keep.iter().map(|v| q.vertex_index(v).unwrap()).collect();
        let m = Arc::new(random_representation(&q, k, 3, &mut r));
        let n = Arc::new(random_representation(&q, k, 3, &mut r));
        let h = hom_space(&m, &n).unwrap();
        // coefficient vectors whose morphism vanishes at the kept vertices
        let rows: Vec<Vec<u32>> = h
            .basis()
            .iter()
            .map(|b| kept.iter().flat_map(|&v| b.map(v).data().to_vec()).collect())
            .collect();
        let width = rows.first().map_or(0, |r| r.len());
        let killed = Matrix::from_rows(k, width, &rows).unwrap().transpose().kernel_vectors();
        let mut coeffs = vec![0u32; h.dim()];
        for b in &killed {
            let c = random_vector(k, 1, &mut r)[0];
            for (ci, bi) in coeffs.iter_mut().zip(b) {
                *ci = k.add(ci, &k.mul(&c, bi));
            }
        }
        let f = h.combine(&coeffs);
        prop_assert!(e.apply_morphism(&f).unwrap().is_zero());
        let im = image_factorization(&f).unwrap();
        prop_assert!(e.apply_module(&im.image).unwrap().is_zero());
    }
}
