use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use norden::exec::Execution;
use norden::family::{family_structure, table1_structure, Family, FamilyParams};
use norden::geometry::{curvature_with, levi_civita, nabla_r_with};
use norden::poly::ratio;
use norden::verify::FamilyTensors;

const MODES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn label(e: Execution) -> &'static str {
    match e {
        Execution::Sequential => "sequential",
        Execution::Parallel => "parallel",
    }
}

fn symbolic_curvature(c: &mut Criterion) {
    let mut group = c.benchmark_group("curvature");
    group.sample_size(10);
    for (name, s) in [
        (
            "six",
            family_structure(&FamilyParams::symbolic(Family::Table2)).unwrap(),
        ),
        (
            "twenty",
            table1_structure(&FamilyParams::symbolic(Family::Table1)).unwrap(),
        ),
    ] {
        let conn = levi_civita(&s);
        for e in MODES {
            group.bench_with_input(BenchmarkId::new(label(e), name), &e, |b, &e| {
                b.iter(|| curvature_with(black_box(&s), &conn, e))
            });
        }
    }
    group.finish();
}

fn symbolic_nabla_r(c: &mut Criterion) {
    let mut group = c.benchmark_group("nabla_r");
    group.sample_size(10);
    let s = family_structure(&FamilyParams::symbolic(Family::Table2)).unwrap();
    let conn = levi_civita(&s);
    let r = curvature_with(&s, &conn, Execution::Parallel);
    for e in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(label(e)), &e, |b, &e| {
            b.iter(|| nabla_r_with(black_box(&s), &conn, &r, e))
        });
    }
    group.finish();
}

fn family_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("family_pipeline");
    group.sample_size(10);
    let symbolic = FamilyParams::symbolic(Family::Table2);
    let numeric = FamilyParams::numeric(Family::Table2, &[1, -2, 3, 1, 2, -1].map(|n| ratio(n, 3))).unwrap();
    for (name, p) in [("symbolic", &symbolic), ("numeric", &numeric)] {
        for e in MODES {
            group.bench_with_input(BenchmarkId::new(label(e), name), &e, |b, &e| {
                b.iter(|| FamilyTensors::compute(black_box(p), e).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, symbolic_curvature, symbolic_nabla_r, family_pipeline);
criterion_main!(benches);
