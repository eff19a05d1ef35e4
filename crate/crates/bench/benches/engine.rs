use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use torgit_bench::{dense_matrix, plane_action, polygon_divisor, polygon_fan};
use torgit_core::fixtures;
use torgit_core::hm::cross_validate;
use torgit_core::{
    build_quotient, git_chambers, semistable_divisor, semistable_group, smith_normal_form, DivisorGroup, Linearization,
};

fn lattice(c: &mut Criterion) {
    let mut g = c.benchmark_group("smith_normal_form");
    for n in [4, 8, 12] {
        let m = dense_matrix(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| smith_normal_form(black_box(m))));
    }
    g.finish();
}

fn cones(c: &mut Criterion) {
    let mut g = c.benchmark_group("cone_dual");
    for n in [4, 6, 8] {
        let fan = polygon_fan(n);
        let sigma = fan.cone(&fan.maximal_cones()[0]).clone();
        g.bench_with_input(BenchmarkId::from_parameter(n), &sigma, |b, s| b.iter(|| black_box(s).dual()));
    }
    g.finish();
}

fn loci(c: &mut Criterion) {
    let fan = fixtures::quadric_fan();
    let act = fixtures::quadric_action();
    let d = fixtures::quadric_divisor(&fan);
    let lin = Linearization::canonical(&act, 1);
    c.bench_function("semistable_divisor/quadric", |b| b.iter(|| semistable_divisor(&fan, &act, black_box(&d), &lin)));
    let group = DivisorGroup::generated_by(d.clone());
    c.bench_function("semistable_group/quadric", |b| b.iter(|| semistable_group(&fan, &act, black_box(&group), &lin)));
    let ss = semistable_divisor(&fan, &act, &d, &lin).unwrap();
    c.bench_function("build_quotient/quadric", |b| b.iter(|| build_quotient(&fan, &act, black_box(&ss))));

    let mut g = c.benchmark_group("semistable_divisor/polygon");
    let act = plane_action();
    for n in [4, 6, 8] {
        let fan = polygon_fan(n);
        let d = polygon_divisor(&fan);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| semistable_divisor(&fan, &act, d, &lin))
        });
    }
    g.finish();
}

fn chambers(c: &mut Criterion) {
    let fan = fixtures::quadric_fan();
    let act = fixtures::quadric_action();
    c.bench_function("git_chambers/quadric", |b| b.iter(|| git_chambers(black_box(&fan), &act)));
    let d = fixtures::quadric_divisor(&fan);
    let lin = Linearization::canonical(&act, 1);
    c.bench_function("cross_validate/quadric", |b| b.iter(|| cross_validate(&fan, &act, black_box(&d), &lin, 64)));
}

criterion_group!(benches, lattice, cones, loci, chambers);
criterion_main!(benches);
