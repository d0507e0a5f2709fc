use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use matchram::{decompose, has_matching_of_size, matching_number};
use matchram_bench::random_graphs;

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching_number");
    for n in [8, 16, 32, 64] {
        let graphs = random_graphs(32, n, 0.3, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, graphs| {
            b.iter(|| graphs.iter().map(|g| matching_number(black_box(g))).sum::<usize>())
        });
    }
    group.finish();

    let graphs = random_graphs(32, 8, 0.3, 7);
    c.bench_function("has_matching_of_size/8/3", |b| {
        b.iter(|| graphs.iter().filter(|g| has_matching_of_size(black_box(g), 3)).count())
    });
}

fn gallai_edmonds(c: &mut Criterion) {
    let graphs = random_graphs(16, 12, 0.25, 12);
    c.bench_function("decompose/12", |b| {
        b.iter(|| graphs.iter().map(|g| decompose(black_box(g)).a.len()).sum::<usize>())
    });
}

criterion_group!(benches, matching, gallai_edmonds);
criterion_main!(benches);
