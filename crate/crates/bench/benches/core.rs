use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linminmax::demo::skew_symmetric_space;
use linminmax::matching::min_cover;
use linminmax::menger::cpc;
use linminmax::ncrank::{max_rank_blowup, ncrank};
use linminmax::{Budget, GenericSampler};
use linminmax_bench::{dense_matrix, matrix_space, menger_instance, relation};

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for n in [8, 16, 32] {
        let a = dense_matrix(n, 1_000, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| a.rank()));
    }
    group.finish();
}

fn cover(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_cover");
    for (n, count) in [(4, 8), (6, 12), (8, 16)] {
        let r = relation(n, count, 2);
        group.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_r{count}")), &r, |b, r| {
            b.iter(|| min_cover(r, Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn capacity(c: &mut Criterion) {
    let mut group = c.benchmark_group("cpc");
    group.sample_size(20);
    for (n, count) in [(4, 6), (6, 8)] {
        let (r, e, f) = menger_instance(n, count, 3);
        group.bench_function(format!("n{n}_r{count}"), |b| {
            b.iter(|| cpc(&r, &e, &f, &mut GenericSampler::with_seed(3), Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn blowup(c: &mut Criterion) {
    let mut group = c.benchmark_group("blowup");
    group.sample_size(20);
    let skew = skew_symmetric_space(3);
    group.bench_function("skew3_r2", |b| {
        b.iter(|| max_rank_blowup(&skew, 2, &mut GenericSampler::with_seed(4), Some(6)).unwrap())
    });
    let v = matrix_space(4, 2, 5);
    group.bench_function("ncrank_random_4x4", |b| b.iter(|| ncrank(&v, &mut GenericSampler::with_seed(5)).unwrap()));
    group.finish();
}

criterion_group!(benches, rank, cover, capacity, blowup);
criterion_main!(benches);
