use criterion::{criterion_group, criterion_main, Criterion};
use siegeldim_core::arthur::solve_g_counts_dropping;
use siegeldim_core::globaldims::mk_series;
use siegeldim_core::groups::GroupLabel;
use siegeldim_core::jacobi::phi_basis;
use siegeldim_core::s6::sp4_f2;

fn bench_group_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate symplectic group over F2", |b| {
        b.iter(|| std::hint::black_box(sp4_f2().len()))
    });
}

fn bench_system_solve(c: &mut Criterion) {
    c.bench_function("solve general-type count system", |b| {
        b.iter(|| solve_g_counts_dropping(GroupLabel::Gamma2).unwrap())
    });
}

fn bench_series_expansion(c: &mut Criterion) {
    c.bench_function("expand dimension series to weight 100", |b| {
        b.iter(|| mk_series(GroupLabel::Gamma2).expand(100))
    });
}

fn bench_jacobi_basis(c: &mut Criterion) {
    c.bench_function("build index-4 Jacobi basis to q^6", |b| {
        b.iter(|| phi_basis(6))
    });
}

criterion_group!(
    benches,
    bench_group_enumeration,
    bench_system_solve,
    bench_series_expansion,
    bench_jacobi_basis
);
criterion_main!(benches);
