use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use genci_core::combinatorics::reconstruct;
use genci_core::enumeration::{cross_validate, enumerate_complexes, CheckSelection};
use genci_core::fixtures::fixture;
use genci_core::{classify_theorem, is_cohen_macaulay, reduced_betti, FieldSpec};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_n4", |b| {
        b.iter(|| enumerate_complexes(black_box(4)).unwrap().len())
    });
    let families = enumerate_complexes(4).unwrap();
    c.bench_function("cross_validate_n4_all", |b| {
        b.iter(|| cross_validate(black_box(&families), &CheckSelection::all()).instances)
    });
}

fn bench_homology(c: &mut Criterion) {
    let rp2 = fixture("RP2").unwrap().doc.complex().unwrap();
    c.bench_function("rp2_betti_q", |b| {
        b.iter(|| reduced_betti(black_box(&rp2), FieldSpec::Rationals))
    });
    c.bench_function("rp2_betti_f2", |b| {
        b.iter(|| reduced_betti(black_box(&rp2), FieldSpec::PrimeField(2)))
    });
    c.bench_function("rp2_cohen_macaulay_q", |b| {
        b.iter(|| is_cohen_macaulay(black_box(&rp2), FieldSpec::Rationals))
    });
}

fn bench_classifier(c: &mut Criterion) {
    let e8 = fixture("E8").unwrap().doc.complex().unwrap();
    c.bench_function("classify_theorem_e8", |b| {
        b.iter(|| classify_theorem(black_box(&e8)).is_gci)
    });
    let family = e8.minimal_nonfaces();
    c.bench_function("reconstruct_e8", |b| {
        b.iter(|| reconstruct(black_box(&family)).facets().len())
    });
}

criterion_group!(benches, bench_enumeration, bench_homology, bench_classifier);
criterion_main!(benches);
