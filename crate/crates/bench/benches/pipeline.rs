use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quandle_quiver::tables::bundled_quandle;
use quandle_quiver::{
    action_polynomial, brute_force_colorings, enumerate_colorings, enumerate_endomorphisms,
    load_corpus, reproduce_tables, Quandle,
};

fn enumeration(c: &mut Criterion) {
    let q = bundled_quandle("five_element").unwrap();
    let mut group = c.benchmark_group("enumerate");
    for name in ["L2a1", "L6a4", "L7n1.mix"] {
        let d = load_corpus(name).unwrap();
        group.bench_with_input(BenchmarkId::new("propagation", name), &d, |b, d| {
            b.iter(|| enumerate_colorings(black_box(d), &q, None).unwrap().len())
        });
    }
    let d = load_corpus("L6a4").unwrap();
    group.bench_function("brute_force/L6a4", |b| {
        b.iter(|| brute_force_colorings(black_box(&d), &q).unwrap().len())
    });
    group.finish();
}

fn polynomial(c: &mut Criterion) {
    let q = bundled_quandle("five_element").unwrap();
    let d = load_corpus("L6a4").unwrap();
    let h = enumerate_colorings(&d, &q, None).unwrap();
    c.bench_function("polynomial/L6a4", |b| {
        b.iter(|| action_polynomial(black_box(&h), 0))
    });
}

fn endomorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("endomorphisms");
    for (name, q) in [
        ("dihedral:7", Quandle::dihedral(7)),
        ("six_element", bundled_quandle("six_element").unwrap()),
        ("trivial:6", Quandle::trivial(6)),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| enumerate_endomorphisms(black_box(&q), None).unwrap().len())
        });
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("tables");
    group.sample_size(10);
    group.bench_function("reproduce", |b| b.iter(reproduce_tables));
    group.finish();
}

criterion_group!(benches, enumeration, polynomial, endomorphisms, tables);
criterion_main!(benches);
