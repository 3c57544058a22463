use criterion::{criterion_group, criterion_main, Criterion};
use topocard::{verify_theorem, verify_theorem_parallel, Reading, TheoremId};

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("thm3.1_n4_pointwise", |b| {
        b.iter(|| verify_theorem(TheoremId::Closure, 4, Reading::PointwiseNonT1, 10).unwrap())
    });
    group.bench_function("thm3.3_n5_literal", |b| {
        b.iter(|| verify_theorem(TheoremId::SemiOpen, 5, Reading::LiteralNonT1, 10).unwrap())
    });
    group.bench_function("thm3.3_n5_literal_4_shards", |b| {
        b.iter(|| {
            verify_theorem_parallel(TheoremId::SemiOpen, 5, Reading::LiteralNonT1, 10, 4).unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_verify);
criterion_main!(benches);
