use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use stpairs::algebra::CyclotomicField;
use stpairs::identities::{self, VerifyOptions};
use stpairs::partitions;
use stpairs::{qseries, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn series_mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("series_mul");
    for order in [200i64, 600] {
        let a = qseries::jtheta(1, 3, order).unwrap();
        let b = qseries::jacobi_bracket(2, 5, order).unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, order), &order, |bch, _| {
                bch.iter(|| black_box(a.mul_with(&b, exec).unwrap()))
            });
        }
    }
    g.finish();
}

fn st_constructions(c: &mut Criterion) {
    let mut g = c.benchmark_group("st_z");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("definition", name), |b| {
            b.iter(|| black_box(partitions::st_series_z_def(60, exec).unwrap()))
        });
        g.bench_function(BenchmarkId::new("crankform", name), |b| {
            b.iter(|| black_box(partitions::st_series_z_crankform(60, exec).unwrap()))
        });
        let f = CyclotomicField::new(5).unwrap();
        g.bench_function(BenchmarkId::new("at_zeta5", name), |b| {
            b.iter(|| black_box(partitions::st_series_at_root(&f, 150, exec).unwrap()))
        });
    }
    g.finish();
}

fn crank_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("crank_table_enum");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| black_box(partitions::crank_table_enum(22, exec))));
    }
    g.finish();
}

// ST(ζ_t) is cached across checks, so after the first iteration this times
// everything except that one series.
fn registry(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_all");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = VerifyOptions {
            order: Some(60),
            exec,
            ..VerifyOptions::default()
        };
        g.bench_function(name, |b| b.iter(|| black_box(identities::verify_all(&opts))));
    }
    g.finish();
}

criterion_group!(benches, series_mul, st_constructions, crank_enumeration, registry);
criterion_main!(benches);
