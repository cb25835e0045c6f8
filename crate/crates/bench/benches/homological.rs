use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use reclift::homological::ext_dim;
use reclift::recollement::{lift_verify, verify_recollement_axioms, EmbeddingMode};
use reclift::{Gorenstein, Module, Side};
use reclift_bench::{dual_numbers, ka2_instance, morn_instance, suite, triangular_instance, BOUND};

fn ext(c: &mut Criterion) {
    let mut g = c.benchmark_group("ext_dim");
    for n in [1, 4, 8] {
        let d = dual_numbers(3);
        let k = Module::simple(d.clone(), 0).unwrap();
        g.bench_with_input(BenchmarkId::new("dual_numbers_k_k", n), &n, |b, &n| {
            b.iter(|| ext_dim(black_box(&k), &k, n).unwrap())
        });
    }
    let inst = morn_instance(3);
    let m = inst.algebra(Side::B).clone();
    let s = Module::simple(m.clone(), 0).unwrap();
    let t = Module::simple(m.clone(), m.num_vertices() - 1).unwrap();
    g.bench_function("mor3_simples_deg2", |b| b.iter(|| ext_dim(black_box(&s), &t, 2).unwrap()));
    g.finish();
}

fn replacements(c: &mut Criterion) {
    let inst = morn_instance(2);
    let g = Gorenstein::new(inst.algebra(Side::B).clone(), BOUND).unwrap();
    let xs = suite(&inst).b;
    c.bench_function("cofibrant_replacement/mor2_suite", |b| {
        b.iter(|| {
            for x in &xs {
                black_box(g.cofibrant_replacement(x).unwrap());
            }
        })
    });
}

fn recollement(c: &mut Criterion) {
    let mut g = c.benchmark_group("recollement_axioms");
    g.sample_size(10);
    for (name, inst) in [("kA2_e2", ka2_instance()), ("mor2_dual", morn_instance(2))] {
        let s = suite(&inst);
        g.bench_function(name, |b| b.iter(|| verify_recollement_axioms(&inst, &s)));
    }
    g.finish();
}

fn lift(c: &mut Criterion) {
    let mut g = c.benchmark_group("lift_verify");
    g.sample_size(10);
    let inst = triangular_instance();
    let s = suite(&inst);
    for mode in [EmbeddingMode::Fast, EmbeddingMode::Thorough] {
        g.bench_function(format!("t2_dual/{mode:?}"), |b| {
            b.iter(|| lift_verify(&inst, &s, mode, 2).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, ext, replacements, recollement, lift);
criterion_main!(benches);
