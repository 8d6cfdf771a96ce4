use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use heavy_core::families::{build_g3, l1, petersen, sample_filtered, Predicate};
use heavy_core::{
    circumference, closure, induced_copies, is_hamiltonian, make_pattern, ClosureKind, Graph, PatternKind, Policy,
};

fn claw_o_heavy_samples(n: usize, count: usize) -> Vec<Graph> {
    let predicate: Predicate = "claw-o-heavy".parse().unwrap();
    sample_filtered(n, 0.5, 7, predicate, 100_000).take(count).collect()
}

fn induced(c: &mut Criterion) {
    let mut group = c.benchmark_group("induced_copies");
    let host = build_g3(2, 8).unwrap().graph;
    for name in ["claw", "P6", "N", "Z3"] {
        let pattern = make_pattern(name.parse::<PatternKind>().unwrap()).unwrap();
        group.bench_with_input(BenchmarkId::new("G3(2,8)", name), &pattern, |b, p| {
            b.iter(|| induced_copies(black_box(&host), p).count())
        });
    }
    group.finish();
}

fn c_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("c_closure");
    for n in [10, 13] {
        let graphs = claw_o_heavy_samples(n, 32);
        group.bench_with_input(BenchmarkId::new("sampled", n), &graphs, |b, gs| {
            b.iter(|| {
                gs.iter().map(|g| closure(g, ClosureKind::C, Policy::Smallest).unwrap().0.edge_count()).sum::<usize>()
            })
        });
    }
    group.finish();
}

fn hamiltonian(c: &mut Criterion) {
    let mut group = c.benchmark_group("hamiltonian_dp");
    for (name, g) in [("petersen", petersen()), ("L1", l1()), ("C16", Graph::cycle(16))] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| is_hamiltonian(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn circumference_dp(c: &mut Criterion) {
    let mut group = c.benchmark_group("circumference");
    for (name, g) in [("petersen", petersen()), ("L1", l1())] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| circumference(black_box(g)).unwrap().length)
        });
    }
    group.finish();
}

criterion_group!(benches, induced, c_closure, hamiltonian, circumference_dp);
criterion_main!(benches);
