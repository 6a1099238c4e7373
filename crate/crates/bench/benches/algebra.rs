use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use normbasis::normal_lab::{enumerate_b, find_primitive_normal, multiplier_sweep};
use normbasis::probe::{jacobson_radical, run_all, survey};
use normbasis::Limits;
use normbasis_bench::{algebras, towers};

fn field_ops(c: &mut Criterion) {
    let t = &towers()[3];
    let top = t.top_field();
    let a = top.from_encoding(517).unwrap();
    let b = top.from_encoding(911).unwrap();
    c.bench_function("mul F_1024", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("inv F_1024", |bench| bench.iter(|| black_box(&a).inv()));
    c.bench_function("frobenius F_1024", |bench| bench.iter(|| t.sigma(black_box(&a))));
}

fn normal_scans(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("normal");
    group.sample_size(10);
    for t in towers() {
        group.bench_with_input(BenchmarkId::new("enumerate_b", t.order()), &t, |bench, t| {
            bench.iter(|| enumerate_b(t, &limits).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("primitive_normal", t.order()), &t, |bench, t| {
            bench.iter(|| find_primitive_normal(t, &limits).unwrap())
        });
        let b = enumerate_b(&t, &limits).unwrap();
        group.bench_with_input(BenchmarkId::new("multiplier_sweep", t.order()), &t, |bench, t| {
            bench.iter(|| multiplier_sweep(t, &b, &limits).unwrap())
        });
    }
    group.finish();
}

fn probes(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("probe");
    group.sample_size(10);
    for a in algebras() {
        group.bench_with_input(BenchmarkId::new("survey", a.name()), &a, |bench, a| {
            bench.iter(|| survey(a, &limits).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("run_all", a.name()), &a, |bench, a| {
            bench.iter(|| run_all(a, None, &limits).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("radical", a.name()), &a, |bench, a| {
            bench.iter(|| jacobson_radical(a).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, field_ops, normal_scans, probes);
criterion_main!(benches);
