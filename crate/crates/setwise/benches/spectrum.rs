//! Benchmarks the exact spectrum pipeline under both execution strategies.
//! With the default `parallel` feature the `parallel` rows use the rayon
//! pool; built with `--no-default-features` they fall back to sequential
//! execution, so the two rows coincide and the comparison is a no-op.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use setwise::certify::{certify, default_point, odd_weights, search};
use setwise::par::Parallelism;
use setwise::spectra::{full_spectrum_with, Mode};

fn strategies() -> [(&'static str, Parallelism); 2] {
    [
        ("sequential", Parallelism::Sequential),
        ("parallel", Parallelism::Parallel),
    ]
}

fn bench_full_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_spectrum_exact");
    group.sample_size(10);
    for n in [21u32, 25] {
        let w = odd_weights(n, &default_point(n).unwrap()).unwrap();
        for (label, strategy) in strategies() {
            group.bench_with_input(BenchmarkId::new(label, n), &w, |b, w| {
                b.iter(|| full_spectrum_with(w, Mode::Exact, None, strategy).unwrap());
            });
        }
    }
    group.finish();
}

fn bench_hybrid_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_spectrum_hybrid");
    group.sample_size(10);
    let n = 33u32;
    let w = odd_weights(n, &default_point(n).unwrap()).unwrap();
    for (label, strategy) in strategies() {
        group.bench_with_input(BenchmarkId::new(label, n), &w, |b, w| {
            b.iter(|| full_spectrum_with(w, Mode::Hybrid, None, strategy).unwrap());
        });
    }
    group.finish();
}

fn bench_certify(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify");
    group.sample_size(10);
    for n in [20u32, 27] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| certify(n, None, Mode::Exact).unwrap());
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for n in [11u32, 14] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| search(n, 2000).unwrap());
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_full_spectrum,
    bench_hybrid_spectrum,
    bench_certify,
    bench_search
);
criterion_main!(benches);
