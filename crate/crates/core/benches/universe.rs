use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rectlab::gentree::{Realization, Rectangulations, Tree};
use rectlab::universe::{enumerate_strong_with, UniverseConfig};
use rectlab::verify::{run_suites, Suite, VerifyConfig};
use rectlab::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn universe(c: &mut Criterion) {
    let mut g = c.benchmark_group("strong_universe");
    g.sample_size(10);
    for n in [6, 7] {
        for (name, exec) in MODES {
            let cfg = UniverseConfig { exec, ..Default::default() };
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| black_box(enumerate_strong_with(n, &cfg).unwrap().len()))
            });
        }
    }
    g.finish();
}

fn tree_levels(c: &mut Criterion) {
    let mut g = c.benchmark_group("t1_level");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, 8), |b| {
            b.iter(|| black_box(Rectangulations::level(Tree::T1, 8, exec).unwrap().len()))
        });
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_n6");
    g.sample_size(10);
    for (name, exec) in MODES {
        let cfg = VerifyConfig { max_n: Some(6), exec };
        g.bench_function(name, |b| b.iter(|| black_box(run_suites(&Suite::ALL, &cfg).len())));
    }
    g.finish();
}

criterion_group!(benches, universe, tree_levels, verify);
criterion_main!(benches);
