use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use minps_bench::dense_minps;
use minps_core::search::exact_e;
use minps_core::{closure, is_minps, GridDims, SearchBudget};

fn bench_closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure");
    for n in [33u32, 66, 132] {
        let (d, a) = dense_minps(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| closure(d, black_box(a))));
    }
    g.finish();
}

fn bench_is_minps(c: &mut Criterion) {
    let mut g = c.benchmark_group("is_minps");
    g.sample_size(10);
    for n in [33u32, 66] {
        let (d, a) = dense_minps(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| is_minps(d, black_box(a))));
    }
    g.finish();
}

fn bench_exact_e(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact_e");
    g.sample_size(10);
    for (m, n) in [(5u32, 4u32), (6, 4), (5, 5)] {
        let d = GridDims::new(m, n).unwrap();
        g.bench_function(format!("{m}x{n}"), |b| b.iter(|| exact_e(black_box(d), SearchBudget::default()).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, bench_closure, bench_is_minps, bench_exact_e);
criterion_main!(benches);
