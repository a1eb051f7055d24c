use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mulecheck_bench::{clique, exact, join};
use mulecheck_core::graph::{chromatic_number, named};
use mulecheck_core::listcolor::{canonical_assignments, color_from_lists, is_d_r_choosable};
use mulecheck_core::mules::{exists_epimorphism, find_hitting_independent_set, mule, reduce_delta};
use mulecheck_core::Budget;

fn choosability(c: &mut Criterion) {
    let k3p4 = join(&clique(3), "P4");
    let k4e3 = join(&clique(4), "E3");
    let k5claw = join(&clique(5), "claw");
    c.bench_function("d1/K3vP4", |b| b.iter(|| is_d_r_choosable(black_box(&k3p4), 1, &exact(false))));
    c.bench_function("d1/K3vP4/symmetry", |b| b.iter(|| is_d_r_choosable(black_box(&k3p4), 1, &exact(true))));
    c.bench_function("d1/K4vE3", |b| b.iter(|| is_d_r_choosable(black_box(&k4e3), 1, &exact(true))));
    c.bench_function("d1/K5vK13", |b| b.iter(|| is_d_r_choosable(black_box(&k5claw), 1, &exact(true))));
    let c5 = named("C5").unwrap();
    let sizes = vec![2; 5];
    c.bench_function("enumerate/C5/pot4", |b| {
        b.iter(|| canonical_assignments(black_box(&c5), &sizes, 4, true).unwrap().len())
    });
}

fn coloring(c: &mut Criterion) {
    let witness = is_d_r_choosable(&join(&clique(4), "E3"), 1, &exact(true)).unwrap().witness.unwrap();
    let g = join(&clique(4), "E3");
    c.bench_function("solver/K4vE3-witness", |b| b.iter(|| color_from_lists(black_box(&g), &witness)));
    let m8 = mule("M8").unwrap();
    c.bench_function("chromatic/M8", |b| b.iter(|| chromatic_number(black_box(&m8))));
}

fn mules(c: &mut Criterion) {
    let m8 = mule("M8").unwrap();
    let c5 = named("C5").unwrap();
    c.bench_function("epimorphism/M8-onto-C5", |b| {
        b.iter(|| exists_epimorphism(black_box(&m8), &c5, Budget::unlimited()))
    });
    c.bench_function("hitting/M8", |b| {
        b.iter(|| find_hitting_independent_set(black_box(&m8), Budget::unlimited()))
    });
    c.bench_function("reduce/M8", |b| b.iter(|| reduce_delta(black_box(&m8), 8, 0, Budget::unlimited())));
}

criterion_group!(benches, choosability, coloring, mules);
criterion_main!(benches);
