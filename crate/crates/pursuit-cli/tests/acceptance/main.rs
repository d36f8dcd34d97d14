//! The acceptance suite: one test per shipping criterion, each printing a
//! single `criterion N: pass` line (visible with `--nocapture`). Every check
//! is exact; random instances come from fixed seeds.

mod gen;
mod trees;

use pursuit_core::{
    check_label_rank_consistency, classic_cops, compute_relations, count_evader_strategies,
    default_trace_cutoff, distance_cops, enumerate_evader_strategies, eternal_domination,
    extract_removable_ordering, extract_strategies, fill_relation_matrix, full_relation_winner,
    game_length, matrix_game_length, matrix_winner, oracle_solve, play_trace,
    pursuer_wins_relational, seepage, solve, traps_cops, verify_position_independence,
    verify_removable_ordering, GameSpec, GameValue, InputGraph, JointPosition, Strategy,
    TraceOutcome, Turn, Winner,
};
use std::path::PathBuf;
use std::time::Instant;

const SEED_AGREEMENT: u64 = 0xACCE_0001;
const SEED_CONSISTENCY: u64 = 0xACCE_0002;
const SEED_RECTANGLE: u64 = 0xACCE_0006;
const SEED_STRATEGY: u64 = 0xACCE_0007;

/// The shared instance set of criteria 1 and 5.
fn agreement_games() -> Vec<GameSpec> {
    let mut rng = gen::rng(SEED_AGREEMENT);
    (0..200)
        .map(|_| gen::random_independent_spec(&mut rng, 60))
        .collect()
}

fn spider_tree() -> InputGraph {
    let mut graph = InputGraph::new(7, false, true);
    for (u, v) in [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)] {
        graph.add_edge(u, v).unwrap();
    }
    graph
}

fn diamond_dag() -> InputGraph {
    let mut graph = InputGraph::new(4, true, false);
    for (u, v) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
        graph.add_edge(u, v).unwrap();
    }
    graph
}

#[test]
fn criterion_1_engine_agreement() {
    let started = Instant::now();
    for (index, spec) in agreement_games().iter().enumerate() {
        let solution = solve(spec).unwrap();
        let from_labels = (solution.winner, solution.best_start, solution.value);

        let relations = compute_relations(spec).unwrap();
        let (winner, start) = pursuer_wins_relational(spec, &relations);
        let from_relations = (winner, start, game_length(spec, &relations));

        let matrix = fill_relation_matrix(spec).unwrap();
        let (winner, start) = matrix_winner(spec, &matrix);
        let from_matrix = (winner, start, matrix_game_length(spec, &matrix));

        let oracle = oracle_solve(spec).unwrap();
        let from_oracle = (oracle.winner, oracle.best_start, oracle.value);

        assert_eq!(from_labels, from_relations, "game {index}: relations differ");
        assert_eq!(from_labels, from_matrix, "game {index}: matrix differs");
        assert_eq!(from_labels, from_oracle, "game {index}: oracle differs");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget is 2 minutes");
    println!(
        "criterion 1: pass — 200 random position-independent games: labels, relations, \
         matrix, and oracle agree on winner, start, and length"
    );
}

#[test]
fn criterion_2_label_rank_consistency() {
    let started = Instant::now();
    let mut rng = gen::rng(SEED_CONSISTENCY);
    let mut biggest = 0;
    for index in 0..100 {
        let spec = gen::random_dependent_spec(&mut rng);
        let solution = solve(&spec).unwrap();
        let state_count = solution.digraph.state_count();
        assert!(state_count <= 20_000, "game {index} has {state_count} states");
        biggest = biggest.max(state_count);
        let relations = compute_relations(&spec).unwrap();
        let violations =
            check_label_rank_consistency(&solution.digraph, &solution.labels, &relations);
        assert!(
            violations.is_empty(),
            "game {index}: {} label/rank violations, first: {:?}",
            violations.len(),
            violations.first()
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget is 1 minute");
    println!(
        "criterion 2: pass — zero label/rank violations on 100 random games \
         (largest had {biggest} states)"
    );
}

#[test]
fn criterion_3_classic_ground_truths() {
    let started = Instant::now();

    // Every free tree on up to 10 vertices, with the counts cross-checked
    // against the known sequence, is a one-cop win.
    let expected_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    let mut tree_count = 0;
    for n in 1..=10 {
        let shapes = trees::free_trees(n);
        assert_eq!(
            shapes.len(),
            expected_counts[n - 1],
            "free tree count for n={n}"
        );
        for edges in shapes {
            let mut graph = InputGraph::new(n as u32, false, true);
            for (u, v) in edges {
                graph.add_edge(u, v).unwrap();
            }
            let spec = classic_cops(&graph, 1).unwrap();
            let oracle = oracle_solve(&spec).unwrap();
            assert_eq!(oracle.winner, Winner::Pursuer, "tree on {n} vertices");
            tree_count += 1;
        }
    }
    assert_eq!(tree_count, 201);

    for n in 4..=12 {
        let graph = InputGraph::cycle(n);
        let one_cop = oracle_solve(&classic_cops(&graph, 1).unwrap()).unwrap();
        assert_eq!(one_cop.winner, Winner::Evader, "C_{n} with one cop");
        let two_cops = oracle_solve(&classic_cops(&graph, 2).unwrap()).unwrap();
        assert_eq!(two_cops.winner, Winner::Pursuer, "C_{n} with two cops");
    }

    for n in 2..=15 {
        let graph = InputGraph::path(n);
        let oracle = oracle_solve(&classic_cops(&graph, 1).unwrap()).unwrap();
        assert_eq!(oracle.winner, Winner::Pursuer, "P_{n}");
        assert_eq!(
            oracle.value,
            GameValue::Finite((n - 1).div_ceil(2)),
            "capture time on P_{n}"
        );
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget is 1 minute");
    println!(
        "criterion 3: pass — all 201 reflexive trees ≤ 10 vertices are one-cop wins; \
         C_4..C_12 need two cops; P_2..P_15 capture times match ⌈(n−1)/2⌉"
    );
}

#[test]
fn criterion_4_petersen() {
    let graph = InputGraph::petersen();

    let two_cops = classic_cops(&graph, 2).unwrap();
    let solution = solve(&two_cops).unwrap();
    assert_eq!(solution.winner, Winner::Evader);
    let oracle = oracle_solve(&two_cops).unwrap();
    assert_eq!(oracle.winner, Winner::Evader);

    let three_cops = classic_cops(&graph, 3).unwrap();
    let started = Instant::now();
    let solution = solve(&three_cops).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(solution.winner, Winner::Pursuer);
    assert!(elapsed.as_secs() < 60, "k=3 solve took {elapsed:?}");
    let oracle = oracle_solve(&three_cops).unwrap();
    assert_eq!(oracle.winner, Winner::Pursuer);
    assert_eq!(oracle.value, solution.value);

    println!(
        "criterion 4: pass — Petersen: two cops lose, three cops win \
         (k=3 solved in {:?}, oracle concurs)",
        elapsed
    );
}

#[test]
fn criterion_5_removable_orderings() {
    let mut returned = 0;
    for (index, spec) in agreement_games().iter().enumerate() {
        let winner = solve(spec).unwrap().winner;
        let matrix = fill_relation_matrix(spec).unwrap();
        let ordering = extract_removable_ordering(spec, &matrix);
        assert_eq!(
            ordering.is_some(),
            winner == Winner::Pursuer,
            "game {index}: ordering should exist exactly for pursuer wins"
        );
        if let Some(ordering) = ordering {
            assert!(
                verify_removable_ordering(spec, &ordering),
                "game {index}: extracted ordering fails verification"
            );
            returned += 1;
        }
    }
    println!(
        "criterion 5: pass — orderings returned for exactly the {returned} pursuer-win \
         games of criterion 1, and every one verifies"
    );
}

#[test]
fn criterion_6_full_relation_criterion() {
    let mut rng = gen::rng(SEED_RECTANGLE);
    let mut pursuer_wins = 0;
    for index in 0..50 {
        let spec = gen::random_sc_rectangle_spec(&mut rng, 40);
        let solution = solve(&spec).unwrap();
        let relations = compute_relations(&spec).unwrap();
        let (relational_winner, _) = pursuer_wins_relational(&spec, &relations);
        assert_eq!(solution.winner, relational_winner, "game {index}");

        let matrix = fill_relation_matrix(&spec).unwrap();
        let (full_winner, _) = full_relation_winner(&spec, &matrix).unwrap();
        assert_eq!(
            full_winner == Winner::Pursuer,
            matrix.is_all_finite(),
            "game {index}: the all-finite criterion is the winner test"
        );
        assert_eq!(
            solution.winner, full_winner,
            "game {index}: all-finite criterion disagrees with the engines"
        );
        if full_winner == Winner::Pursuer {
            pursuer_wins += 1;
        }
    }
    println!(
        "criterion 6: pass — 50 strongly-connected rectangle games: the Pursuer wins \
         exactly when no entry is infinite ({pursuer_wins} pursuer wins)"
    );
}

#[test]
fn criterion_7_strategy_optimality() {
    let mut rng = gen::rng(SEED_STRATEGY);
    let mut found = 0u32;
    let mut attempts = 0u32;
    let mut enumerated_total: u128 = 0;
    while found < 20 {
        attempts += 1;
        let n_p = 2 + attempts % 3;
        let n_e = 2 + attempts % 2;
        let spec = gen::random_small_dense_spec(&mut rng, n_p, n_e);
        let solution = solve(&spec).unwrap();
        if solution.winner != Winner::Pursuer {
            continue;
        }
        let evader_states = solution
            .digraph
            .states()
            .iter()
            .filter(|s| s.turn == Turn::Evader)
            .count();
        if evader_states > 12 {
            continue;
        }
        let count = count_evader_strategies(&spec).unwrap();
        if count > 20_000 {
            continue;
        }

        let value = solution.value.finite().expect("pursuer win has finite value");
        let (pursuer, extracted_evader) = extract_strategies(&solution.digraph, &solution.labels);
        let best = solution.best_start.expect("pursuer win has a start");
        let cutoff = default_trace_cutoff(&solution.digraph);
        let strategies = enumerate_evader_strategies(&spec, 20_000).unwrap();
        assert!(!strategies.is_empty());
        enumerated_total += count;

        let mut worst_seen = 0;
        for q in spec.initial_evader(best) {
            let start = JointPosition {
                pursuer: best,
                evader: q,
            };
            for moves in &strategies {
                let evader = Strategy::from_moves(moves.clone());
                let trace = play_trace(&spec, &pursuer, &evader, start, cutoff).unwrap();
                match trace.outcome {
                    TraceOutcome::PursuerWins { pursuer_moves } => {
                        assert!(
                            pursuer_moves <= value,
                            "an evader strategy forced {pursuer_moves} > value {value}"
                        );
                        worst_seen = worst_seen.max(pursuer_moves);
                    }
                    TraceOutcome::CutoffReached => {
                        panic!("an evader strategy escaped a pursuer-win game")
                    }
                }
            }
            // The extracted evader realizes the worst case among them.
            let trace = play_trace(&spec, &pursuer, &extracted_evader, start, cutoff).unwrap();
            assert!(matches!(trace.outcome, TraceOutcome::PursuerWins { .. }));
        }
        assert_eq!(
            worst_seen, value,
            "no enumerated evader strategy achieved the value"
        );
        found += 1;
    }
    println!(
        "criterion 7: pass — 20 pursuer-win games: the extracted strategy beats all \
         {enumerated_total} enumerated evader strategies within the value, with equality"
    );
}

#[test]
fn criterion_8_variant_sanity() {
    // Distance 0 is the classic game, field by field.
    for (graph, cops) in [
        (InputGraph::path(4), 1),
        (InputGraph::cycle(5), 1),
        (spider_tree(), 1),
        (InputGraph::path(3), 2),
    ] {
        let classic = classic_cops(&graph, cops).unwrap();
        let distance = distance_cops(&graph, cops, 0).unwrap();
        assert_specs_match(&classic, &distance);
    }

    // Trapping every vertex ends the game at placement.
    let all_trapped = traps_cops(&InputGraph::complete(4), 1, &[0, 1, 2, 3]).unwrap();
    let solution = solve(&all_trapped).unwrap();
    assert_eq!(solution.winner, Winner::Pursuer);
    assert_eq!(solution.value, GameValue::ZERO);
    assert_eq!(oracle_solve(&all_trapped).unwrap().value, GameValue::ZERO);

    // Eternal domination on the triangle and the 3-path.
    let triangle = oracle_solve(&eternal_domination(&InputGraph::complete(3), 1, false).unwrap())
        .unwrap();
    assert_eq!(triangle.winner, Winner::Evader, "one guard holds K_3");
    let path_one = oracle_solve(&eternal_domination(&InputGraph::path(3), 1, false).unwrap())
        .unwrap();
    assert_eq!(path_one.winner, Winner::Pursuer, "one guard loses P_3");
    let path_two = oracle_solve(&eternal_domination(&InputGraph::path(3), 2, false).unwrap())
        .unwrap();
    assert_eq!(path_two.winner, Winner::Evader, "two guards hold P_3");

    // The seepage fixture matches the oracle and is position-dependent,
    // with a concrete witness.
    let flood = seepage(&diamond_dag(), 1, &[]).unwrap();
    let solution = solve(&flood).unwrap();
    let oracle = oracle_solve(&flood).unwrap();
    assert_eq!(solution.winner, oracle.winner);
    assert_eq!(solution.value, oracle.value);
    assert_eq!(solution.best_start, oracle.best_start);
    let witness = verify_position_independence(&flood)
        .expect("seepage moves must depend on the joint position");
    assert!(witness.to_string().contains("depend"), "witness: {witness}");

    println!(
        "criterion 8: pass — distance-0 equals classic field-by-field, universal traps \
         win at placement, eternal domination trio as expected, seepage diamond matches \
         the oracle and yields a dependence witness"
    );
}

fn assert_specs_match(a: &GameSpec, b: &GameSpec) {
    assert_eq!(a.pursuer_position_count(), b.pursuer_position_count());
    assert_eq!(a.evader_position_count(), b.evader_position_count());
    assert_eq!(a.timing(), b.timing());
    assert_eq!(a.initial_pursuer(), b.initial_pursuer());
    for &p in a.initial_pursuer() {
        assert_eq!(a.initial_evader(p), b.initial_evader(p));
    }
    for p in 0..a.pursuer_position_count() {
        for q in 0..a.evader_position_count() {
            let j = JointPosition::new(p, q);
            assert_eq!(a.is_final(j), b.is_final(j), "finality at {j}");
            assert_eq!(a.pursuer_moves(j), b.pursuer_moves(j), "pursuer moves at {j}");
            assert_eq!(a.evader_moves(j), b.evader_moves(j), "evader moves at {j}");
        }
    }
}

#[test]
fn criterion_9_determinism() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/manifests");
    let mut manifests: Vec<PathBuf> = std::fs::read_dir(&fixtures)
        .expect("bundled manifests")
        .map(|entry| entry.unwrap().path())
        .filter(|path| path.extension().is_some_and(|e| e == "toml"))
        .collect();
    manifests.sort();
    assert!(
        manifests.len() >= 20,
        "expected at least 20 bundled fixtures, found {}",
        manifests.len()
    );

    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_pursuit"))
            .arg("oracle-check")
            .args(&manifests)
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0), "first oracle-check run failed");
    assert_eq!(second.status.code(), Some(0), "second oracle-check run failed");
    assert_eq!(
        first.stdout, second.stdout,
        "oracle-check output differs between runs"
    );
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("status: ok"));

    println!(
        "criterion 9: pass — oracle-check over {} bundled fixtures is byte-identical \
         across runs and exits 0",
        manifests.len()
    );
}
