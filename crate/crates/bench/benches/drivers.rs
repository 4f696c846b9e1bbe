use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sssp_bench::instances;
use sssp_core::{run, AlgoId, RunOptions};

fn drivers(c: &mut Criterion) {
    for (name, g) in instances() {
        let mut group = c.benchmark_group(name);
        group.sample_size(10);
        for algo in [AlgoId::Pallottino, AlgoId::Tarjan, AlgoId::Gor, AlgoId::Zdo, AlgoId::ZdoBits] {
            group.bench_with_input(BenchmarkId::from_parameter(algo), &g, |b, g| {
                b.iter(|| run(g, algo, &RunOptions::default()))
            });
        }
        group.finish();
    }
}

criterion_group!(benches, drivers);
criterion_main!(benches);
