use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tricat_bench::{complex_pair, rng, singular_matrix, verdier_fixture};
use tricat_core::exactlin::fitting_decomposition;
use tricat_core::homotopy::{cone, homotopy_hom, HomSemantics};
use tricat_core::random::random_chain_map;
use tricat_core::standard::{a2_derived_catalog, a3_derived_catalog, forget_arrows, killed_objects, truncation};
use tricat_core::trifun::{condition_report, SamplingPolicy};
use tricat_core::verdict::{build_ideal_table, fitting_inverse_witness, full_report};
use tricat_core::{PrimeField, Rationals};

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn linear_algebra(c: &mut Criterion) {
    let a = singular_matrix(gf(3), 8, 1);
    c.bench_function("fitting 8x8 gf3", |b| b.iter(|| fitting_decomposition(black_box(&a)).unwrap()));
    let a = singular_matrix(Rationals, 8, 1);
    c.bench_function("fitting 8x8 q", |b| b.iter(|| fitting_decomposition(black_box(&a)).unwrap()));
}

fn homotopy(c: &mut Criterion) {
    let (x, y) = complex_pair(gf(2), 7);
    c.bench_function("homotopy hom a3 3-term", |b| {
        b.iter(|| homotopy_hom(black_box(&x), black_box(&y), HomSemantics::Homotopy).unwrap())
    });
    let f = random_chain_map(&x, &y, &mut rng(8)).unwrap();
    c.bench_function("cone a3 3-term", |b| b.iter(|| cone(black_box(&f)).unwrap()));
    c.bench_function("a3 derived catalog gf2", |b| b.iter(|| a3_derived_catalog(gf(2)).unwrap()));
}

fn reports(c: &mut Criterion) {
    let cat = a2_derived_catalog(gf(2)).unwrap();
    let f = forget_arrows(&cat).unwrap();
    let policy = SamplingPolicy::default();
    c.bench_function("condition report a2 gf2", |b| b.iter(|| condition_report(black_box(&f), &policy)));
    c.bench_function("full report a2 gf2", |b| b.iter(|| full_report(black_box(&f), &[], &policy).unwrap()));

    let cat = a2_derived_catalog(Rationals).unwrap();
    let f = forget_arrows(&cat).unwrap();
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("condition report a2 q", |b| b.iter(|| condition_report(black_box(&f), &policy)));
    g.finish();

    let cat = a3_derived_catalog(gf(2)).unwrap();
    let t = truncation(&cat, &["a", "b"]).unwrap();
    let ks = killed_objects(&t);
    c.bench_function("ideal table a3 gf2", |b| b.iter(|| build_ideal_table(black_box(&t), &ks).unwrap()));
}

fn verdier(c: &mut Criterion) {
    let inst = verdier_fixture(3);
    c.bench_function("fitting inverse witness", |b| {
        b.iter(|| fitting_inverse_witness(black_box(&inst.functor), 0, 1, &inst.s).unwrap())
    });
}

criterion_group!(benches, linear_algebra, homotopy, reports, verdier);
criterion_main!(benches);
