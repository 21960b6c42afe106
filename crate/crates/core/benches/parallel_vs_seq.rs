//! Parallel vs sequential throughput on the two hot workloads: grid
//! evaluation of the series survival and Monte Carlo sampling.
//!
//! With default features the `parallel` entries run on rayon; build with
//! `--no-default-features` to measure the pure sequential core (both entries
//! then coincide).

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use porel_core::{exec, mc, BaselineDist, GeneratorSpec, SystemModel};

fn model() -> SystemModel {
    SystemModel::new(
        BaselineDist::weibull(1.0, 1.5).unwrap(),
        vec![0.5, 1.3, 2.2, 3.4],
        GeneratorSpec::clayton(0.5).unwrap(),
    )
    .unwrap()
}

fn bench_grid_eval(c: &mut Criterion) {
    let m = model();
    let ts: Vec<f64> = (1..=50_000).map(|i| i as f64 * 1e-4).collect();
    let mut group = c.benchmark_group("series_survival_grid");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(exec::map_slice(&ts, |&t| m.series_survival(t))))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(exec::map_slice_seq(&ts, |&t| m.series_survival(t))))
    });
    group.finish();
}

fn bench_sampling(c: &mut Criterion) {
    let m = model();
    let mut group = c.benchmark_group("mc_sample_20k");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| black_box(mc::sample(&m, 20_000, 7).unwrap())));
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(mc::sample_seq(&m, 20_000, 7).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_grid_eval, bench_sampling);
criterion_main!(benches);
