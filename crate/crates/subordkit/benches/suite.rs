//! Compares the rayon-parallel suite runner against the sequential
//! fallback on a reduced configuration.

use criterion::{criterion_group, criterion_main, Criterion};

use subordkit::harness::{run_suite, run_suite_sequential, GenConfig};

fn bench_cfg() -> GenConfig {
    GenConfig {
        seed: 42,
        max_atoms_exhaustive: 2,
        max_atoms_sampled: 3,
        samples_per_size: 20,
        law_filter: Vec::new(),
    }
}

fn suite_benches(c: &mut Criterion) {
    let cfg = bench_cfg();
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| run_suite(&cfg)));
    group.bench_function("sequential", |b| b.iter(|| run_suite_sequential(&cfg)));
    group.finish();
}

criterion_group!(benches, suite_benches);
criterion_main!(benches);
