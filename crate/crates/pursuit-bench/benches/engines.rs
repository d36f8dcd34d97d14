//! Engine comparison over classic cop-and-robber sweeps: the state-digraph
//! labelling, the relation sequence, and the relation matrix on the same
//! instances, plus the three-cop Petersen solve as a single heavyweight case.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pursuit_core::{
    classic_cops, compute_relations, fill_relation_matrix, game_length, matrix_game_length,
    solve, GameSpec, InputGraph,
};

fn engine_benches(c: &mut Criterion, group_name: &str, cases: &[(u32, GameSpec)]) {
    let mut group = c.benchmark_group(group_name);
    for (n, spec) in cases {
        group.bench_with_input(BenchmarkId::new("labels", n), spec, |b, spec| {
            b.iter(|| solve(spec).unwrap().value)
        });
        group.bench_with_input(BenchmarkId::new("relations", n), spec, |b, spec| {
            b.iter(|| {
                let relations = compute_relations(spec).unwrap();
                game_length(spec, &relations)
            })
        });
        group.bench_with_input(BenchmarkId::new("matrix", n), spec, |b, spec| {
            b.iter(|| {
                let matrix = fill_relation_matrix(spec).unwrap();
                matrix_game_length(spec, &matrix)
            })
        });
    }
    group.finish();
}

fn single_cop_paths(c: &mut Criterion) {
    let cases: Vec<(u32, GameSpec)> = [8, 16, 32]
        .into_iter()
        .map(|n| (n, classic_cops(&InputGraph::path(n), 1).unwrap()))
        .collect();
    engine_benches(c, "path_one_cop", &cases);
}

fn two_cop_cycles(c: &mut Criterion) {
    let cases: Vec<(u32, GameSpec)> = [6, 8, 10]
        .into_iter()
        .map(|n| (n, classic_cops(&InputGraph::cycle(n), 2).unwrap()))
        .collect();
    engine_benches(c, "cycle_two_cops", &cases);
}

fn petersen_three_cops(c: &mut Criterion) {
    let spec = classic_cops(&InputGraph::petersen(), 3).unwrap();
    let mut group = c.benchmark_group("petersen_three_cops");
    group.sample_size(10);
    group.bench_function("labels", |b| b.iter(|| solve(&spec).unwrap().value));
    group.finish();
}

criterion_group!(benches, single_cop_paths, two_cop_cycles, petersen_three_cops);
criterion_main!(benches);
