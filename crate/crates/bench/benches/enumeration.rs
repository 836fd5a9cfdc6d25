use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbow_core::{enumerate_bridgeless_outerplanar, enumerate_two_connected_outerplanar, is_outerplanar};

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [6, 8, 9] {
        group.bench_with_input(BenchmarkId::new("two_connected", n), &n, |b, &n| {
            b.iter(|| enumerate_two_connected_outerplanar(n).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("bridgeless", n), &n, |b, &n| {
            b.iter(|| enumerate_bridgeless_outerplanar(n).unwrap().len())
        });
    }
    group.finish();
}

fn bench_recognition(c: &mut Criterion) {
    let graphs = enumerate_bridgeless_outerplanar(8).unwrap();
    c.bench_function("is_outerplanar/bridgeless_n8", |b| {
        b.iter(|| graphs.iter().filter(|g| is_outerplanar(g)).count())
    });
}

criterion_group!(benches, bench_enumeration, bench_recognition);
criterion_main!(benches);
