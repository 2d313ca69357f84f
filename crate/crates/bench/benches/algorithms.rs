use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use frameforge::cep::{cep, CepMethod};
use frameforge::clone::{unary_clone, DEFAULT_CLONE_CAP};
use frameforge::{all_subalgebras, builtin_frame, canonical_form, congruence_generators, Limits};

fn congruences(c: &mut Criterion) {
    let wheel = builtin_frame("wheel:5").unwrap();
    c.bench_function("congruence_generators/wheel:5", |b| {
        b.iter(|| congruence_generators(black_box(&wheel)))
    });
}

fn subalgebras(c: &mut Criterion) {
    let limits = Limits::default();
    let wheel = builtin_frame("wheel:5").unwrap();
    c.bench_function("all_subalgebras/wheel:5", |b| {
        b.iter(|| all_subalgebras(black_box(&wheel), &limits).unwrap())
    });
}

fn cep_deciders(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("cep");
    group.sample_size(10);
    for name in ["example1", "cycle:4", "wheel:5"] {
        let frame = builtin_frame(name).unwrap();
        for method in [CepMethod::Direct, CepMethod::TwoGenerated, CepMethod::Pcep] {
            group.bench_function(format!("{method:?}/{name}"), |b| {
                b.iter(|| cep(black_box(&frame), method, &limits).unwrap())
            });
        }
    }
    group.finish();
}

fn clones(c: &mut Criterion) {
    let example1 = builtin_frame("example1").unwrap();
    c.bench_function("unary_clone/example1", |b| {
        b.iter(|| unary_clone(black_box(&example1), DEFAULT_CLONE_CAP))
    });
}

fn canonical(c: &mut Criterion) {
    let cycle = builtin_frame("cycle:6").unwrap();
    c.bench_function("canonical_form/cycle:6", |b| {
        b.iter(|| canonical_form(black_box(&cycle), 8).unwrap())
    });
}

criterion_group!(benches, congruences, subalgebras, cep_deciders, clones, canonical);
criterion_main!(benches);
