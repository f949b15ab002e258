use std::f64::consts::PI;
use std::hint::black_box;

use altquad::{
    alt_composite, alt_estimate, build_alt_tableau, build_romberg_tableau, default_ordering,
    lookup, sample,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn tableaus(c: &mut Criterion) {
    let sin = lookup("sin").unwrap();
    let mut group = c.benchmark_group("tableau");
    for n in [32usize, 1024] {
        let grid = sample(&sin, PI, 2.0 * PI, n).unwrap();
        let ordering = default_ordering(n);
        group.bench_with_input(BenchmarkId::new("alt", n), &grid, |b, g| {
            b.iter(|| build_alt_tableau(black_box(g), &ordering).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("romberg", n), &grid, |b, g| {
            b.iter(|| build_romberg_tableau(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn estimators(c: &mut Criterion) {
    let grid = sample(&lookup("exp").unwrap(), 0.0, 1.0, 1 << 14).unwrap();
    let mut group = c.benchmark_group("estimator");
    group.bench_function("alt", |b| {
        b.iter(|| alt_estimate(black_box(&grid)).unwrap())
    });
    for m in [2usize, 64, 4096] {
        group.bench_with_input(BenchmarkId::new("alt_composite", m), &m, |b, &m| {
            b.iter(|| alt_composite(black_box(&grid), m).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, tableaus, estimators);
criterion_main!(benches);
