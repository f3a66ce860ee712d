//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tricat_core::exactlin::Matrix;
use tricat_core::homotopy::{BoundedComplex, HomSemantics};
use tricat_core::random::{random_complex, random_matrix, verdier_instance, VerdierInstance};
use tricat_core::standard::{a2_derived_catalog, a3, truncation};
use tricat_core::{Field, PrimeField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A square matrix with a nontrivial nilpotent part.
pub fn singular_matrix<F: Field>(field: F, n: usize, seed: u64) -> Matrix<F> {
    let mut a = random_matrix(field, n, n, &mut rng(seed));
    for j in 0..n {
        a.set(n - 1, j, field.zero());
    }
    a
}

/// Two random three-term complexes over A3.
pub fn complex_pair(field: PrimeField, seed: u64) -> (Arc<BoundedComplex<PrimeField>>, Arc<BoundedComplex<PrimeField>>) {
    let mut r = rng(seed);
    let q = a3();
    let c = Arc::new(random_complex(&q, field, 0, 3, 3, &mut r).expect("complex"));
    let d = Arc::new(random_complex(&q, field, 0, 3, 3, &mut r).expect("complex"));
    (c, d)
}

/// `s: X → X ⊕ K` on the A2 derived catalog with truncation to `a` killing `K`.
pub fn verdier_fixture(seed: u64) -> VerdierInstance<PrimeField> {
    let k = PrimeField::new(2).expect("prime");
    let base = a2_derived_catalog(k).expect("catalog");
    let obj = |n: &str| base.object(base.index(n).expect("name")).clone();
    let xs = [obj("P(b)"), obj("S(a)[1]")];
    let ks = [obj("S(b)"), obj("S(b)[1]")];
    verdier_instance(k, &xs, &ks, |c| truncation(c, &["a"]), HomSemantics::Derived, &mut rng(seed)).expect("instance")
}
