use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use zv_core::{
    bernoulli_table, enumerate_params, evaluate, generate, mhs, mhs_table, Fp, Index, ParamBounds,
    PrimeTables, RelationKind,
};

fn batch_inversion(c: &mut Criterion) {
    let fp = Fp::new(1_000_003).unwrap();
    let xs: Vec<u64> = (1..=4096u64).map(|t| t * 12345 % 1_000_002 + 1).collect();
    let mut group = c.benchmark_group("inversion");
    group.bench_function("batch_4096", |b| {
        b.iter(|| fp.batch_inv(black_box(&xs)).unwrap())
    });
    group.bench_function("single_4096", |b| {
        b.iter(|| {
            xs.iter()
                .map(|&x| fp.inv(x).unwrap())
                .fold(0u64, |acc, v| acc ^ v)
        })
    });
    group.finish();
}

fn bernoulli(c: &mut Criterion) {
    let mut group = c.benchmark_group("bernoulli_table");
    for p in [199u64, 997, 9973] {
        group.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| {
            b.iter(|| bernoulli_table(black_box(p), (p - 3) as u32).unwrap())
        });
    }
    group.finish();
}

fn harmonic_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("mhs");
    let index = Index::new(vec![2, 1, 3, 1, 2]).unwrap();
    for p in [199u64, 99991] {
        group.bench_with_input(BenchmarkId::new("single", p), &p, |b, &p| {
            b.iter(|| mhs(black_box(&index), p, false).unwrap())
        });
    }
    for w in [8u32, 10, 12] {
        group.bench_with_input(BenchmarkId::new("table_p199", w), &w, |b, &w| {
            b.iter(|| mhs_table(black_box(w), 199).unwrap())
        });
    }
    group.finish();
}

fn relation_sweep(c: &mut Criterion) {
    let bounds = ParamBounds::new(9).with_depth_max(5);
    let instances: Vec<_> = enumerate_params(RelationKind::Main, &bounds)
        .iter()
        .chain(enumerate_params(RelationKind::Oyama, &bounds).iter())
        .map(|p| generate(p).unwrap())
        .collect();
    let coverage = instances.iter().map(|i| i.max_weight()).max().unwrap();
    let tables = PrimeTables::build(199, coverage).unwrap();
    c.bench_function("evaluate_main_and_oyama_p199", |b| {
        b.iter(|| {
            instances
                .iter()
                .filter(|i| 199 >= i.min_prime())
                .map(|i| evaluate(black_box(i), &tables).unwrap().pass)
                .filter(|&pass| pass)
                .count()
        })
    });
}

criterion_group!(
    benches,
    batch_inversion,
    bernoulli,
    harmonic_sums,
    relation_sweep
);
criterion_main!(benches);
