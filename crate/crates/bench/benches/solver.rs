use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use deltaderiv::{assemble_system, kernel_at, rat, scan, solve, Poly, ScanOptions};
use deltaderiv_bench::{sl2_irrep, sl2_pair, sl3_adjoint};

fn fixed_delta(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel_at");
    for n in [2u32, 4, 8] {
        let f = sl2_irrep(n);
        let system = assemble_system(&f.algebra, &f.module).unwrap();
        let delta = rat(-2, n as i64);
        group.bench_with_input(BenchmarkId::new("sl2", n), &delta, |b, d| {
            b.iter(|| kernel_at(black_box(&system), d).unwrap())
        });
    }
    let f = sl3_adjoint();
    let system = assemble_system(&f.algebra, &f.module).unwrap();
    group.bench_function("sl3 adjoint 1/2", |b| {
        b.iter(|| kernel_at(black_box(&system), &rat(1, 2)).unwrap())
    });
    group.finish();

    let f = sl2_irrep(6);
    c.bench_function("solve graded sl2 V(6)", |b| {
        b.iter(|| solve(&f.algebra, &f.module, &rat(-1, 3), Some(1)).unwrap())
    });
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for f in [sl2_irrep(4), sl2_irrep(8), sl2_pair(), sl3_adjoint()] {
        group.bench_function(f.name, |b| {
            b.iter(|| scan(black_box(&f.algebra), &f.module, ScanOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn roots(c: &mut Criterion) {
    // (δ − 1)(3δ + 2)(5δ − 2)(7δ² − 3)
    let p = [[2, 3], [-2, 5]]
        .iter()
        .fold(Poly::from_ints(&[-1, 1]), |acc, f| {
            &acc * &Poly::from_ints(f)
        });
    let p = &p * &Poly::from_ints(&[-3, 0, 7]);
    c.bench_function("rational_roots degree 5", |b| {
        b.iter(|| black_box(&p).rational_roots().unwrap())
    });
}

criterion_group!(benches, fixed_delta, scans, roots);
criterion_main!(benches);
