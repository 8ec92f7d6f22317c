use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kkr_e6::tensor::enumerate_all_hw;
use kkr_e6::verify::{verify, VerifyOptions};
use kkr_e6::{enumerate_rcs, Strategy, Weight};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("highest_weight_paths");
    for length in [4, 5, 6] {
        for (name, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, length), &length, |b, &l| {
                b.iter(|| enumerate_all_hw(black_box(l), s))
            });
        }
    }
    group.finish();
}

fn rigged(c: &mut Criterion) {
    let mut group = c.benchmark_group("rigged_configurations");
    let lambda = Weight([0, 0, 1, 0, 0, 0]);
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::new(name, 6), |b| {
            b.iter(|| enumerate_rcs(black_box(lambda), 6, s))
        });
    }
    group.finish();
}

fn harness(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, s) in STRATEGIES {
        let opts = VerifyOptions {
            strategy: s,
            ..VerifyOptions::new(5)
        };
        group.bench_function(BenchmarkId::new(name, 5), |b| {
            b.iter(|| verify(black_box(&opts)))
        });
    }
    group.finish();
}

criterion_group!(benches, paths, rigged, harness);
criterion_main!(benches);
