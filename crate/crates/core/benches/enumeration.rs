//! Sequential vs rayon execution of the three parallel kernels.

use affchar_core::char_engine::ch_h_with;
use affchar_core::fermionic::ch_f_inf_with;
use affchar_core::kostka::kostka_matrix_with;
use affchar_core::{DynkinLabel, Execution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn fermionic(c: &mut Criterion) {
    let mut group = c.benchmark_group("ch_f_inf su(4) level 4 (1,2,1) to q^4");
    group.sample_size(10);
    let l = DynkinLabel::from([1, 2, 1]);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| ch_f_inf_with(&l, 4, 4, exec).unwrap()));
    }
    group.finish();
}

fn kostka(c: &mut Criterion) {
    let mut group = c.benchmark_group("kostka_matrix su(4) threshold 6 class 0");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| kostka_matrix_with(3, 6, 0, exec).unwrap()));
    }
    group.finish();
}

fn irreducible(c: &mut Criterion) {
    let mut group = c.benchmark_group("ch_H su(4) level 4 (2,1,1) to q^3");
    group.sample_size(10);
    let l = DynkinLabel::from([2, 1, 1]);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| ch_h_with(&l, 4, 3, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, fermionic, kostka, irreducible);
criterion_main!(benches);
