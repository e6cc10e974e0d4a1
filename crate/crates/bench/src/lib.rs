use criterion::{black_box, BenchmarkId, Criterion};
use permroot::cycletype::{partitions_of, CycleType};
use permroot::oracle::oracle_count_roots;
use permroot::series::build_total_root_series;
use permroot::{count_roots, Parity};

pub fn benchmarks(c: &mut Criterion) {
    closed_form(c);
    series(c);
    oracle(c);
    sequences(c);
}

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_roots");
    for n in [20u32, 50, 100] {
        let ty = CycleType::identity(n);
        group.bench_with_input(BenchmarkId::new("identity_k12", n), &ty, |b, ty| {
            b.iter(|| count_roots(black_box(12), ty))
        });
    }
    group.bench_function("all_types_n12_k6", |b| {
        let types = partitions_of(12);
        b.iter(|| {
            types.iter().for_each(|t| {
                black_box(count_roots(6, t));
            })
        })
    });
    group.finish();
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_total_root_series");
    group.sample_size(10);
    for n in [8u32, 12, 16] {
        group.bench_with_input(BenchmarkId::new("k6", n), &n, |b, &n| {
            b.iter(|| build_total_root_series(6, black_box(n)))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let ty = CycleType::from_parts([(1, 3), (2, 2)]);
    group.bench_function("k2_n7", |b| {
        b.iter(|| oracle_count_roots(2, black_box(&ty)).unwrap())
    });
    group.finish();
}

fn sequences(c: &mut Criterion) {
    c.bench_function("identity_root_counts_k8_40", |b| {
        b.iter(|| {
            permroot::sequences::identity_root_counts(8, Parity::Even, black_box(40)).unwrap()
        })
    });
}
