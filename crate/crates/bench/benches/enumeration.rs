use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use topocard::{enumerate_spaces, EnumerationFilter, FiniteSpace, PointSet};

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_spaces");
    for n in 3..=5 {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_spaces(n, EnumerationFilter::ALL).unwrap().count())
        });
    }
    group.finish();
}

fn bench_closure(c: &mut Criterion) {
    let spaces: Vec<FiniteSpace> = enumerate_spaces(4, EnumerationFilter::ALL)
        .unwrap()
        .collect();
    c.bench_function("closure_all_subsets_n4", |b| {
        b.iter(|| {
            let mut acc = 0usize;
            for s in &spaces {
                for a in PointSet::all_subsets(4) {
                    acc += s.closure(black_box(a)).len();
                }
            }
            acc
        })
    });
}

criterion_group!(benches, bench_enumerate, bench_closure);
criterion_main!(benches);
