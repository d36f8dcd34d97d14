//! Seeded random game generators for the acceptance checks.

use pursuit_core::{position_independent_spec, GameSpec, PositionDigraph, PositionId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random move digraph with a loop on every vertex plus random extra arcs.
pub fn random_digraph_with_loops(rng: &mut ChaCha8Rng, n: u32) -> PositionDigraph {
    let mut digraph = PositionDigraph::new(n);
    digraph.add_loops();
    let density = rng.random_range(0.05..0.5);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(density) {
                digraph.add_arc(u, v);
            }
        }
    }
    digraph
}

/// A random final set over the full position rectangle with density drawn
/// from 2–20%, never empty.
fn random_final_set(rng: &mut ChaCha8Rng, n_p: u32, n_e: u32) -> HashSet<(u32, u32)> {
    let total = (n_p * n_e) as usize;
    let density = rng.random_range(0.02..=0.20);
    let count = ((total as f64 * density).round() as usize).clamp(1, total);
    rand::seq::index::sample(rng, total, count)
        .iter()
        .map(|i| (i as u32 / n_e, i as u32 % n_e))
        .collect()
}

/// A position-independent game: random loop-closed move digraphs on each
/// side, a random final set, and every start allowed.
pub fn random_independent_spec_with_sides(
    rng: &mut ChaCha8Rng,
    n_p: u32,
    n_e: u32,
) -> GameSpec {
    let pursuer = random_digraph_with_loops(rng, n_p);
    let evader = random_digraph_with_loops(rng, n_e);
    let final_set = random_final_set(rng, n_p, n_e);
    position_independent_spec(pursuer, evader, move |j| {
        final_set.contains(&(j.pursuer.0, j.evader.0))
    })
}

pub fn random_independent_spec(rng: &mut ChaCha8Rng, max_side: u32) -> GameSpec {
    let n_p = rng.random_range(2..=max_side);
    let n_e = rng.random_range(2..=max_side);
    random_independent_spec_with_sides(rng, n_p, n_e)
}

/// A tiny position-independent game with a heavy final set (up to half the
/// rectangle), so that pursuer wins are common enough to sample. The evader
/// digraph is kept dense to give the strategy enumeration real choices.
pub fn random_small_dense_spec(rng: &mut ChaCha8Rng, n_p: u32, n_e: u32) -> GameSpec {
    let pursuer = random_digraph_with_loops(rng, n_p);
    let mut evader = PositionDigraph::new(n_e);
    evader.add_loops();
    for u in 0..n_e {
        for v in 0..n_e {
            if u != v && rng.random_bool(0.7) {
                evader.add_arc(u, v);
            }
        }
    }
    let total = (n_p * n_e) as usize;
    let count = rng.random_range(1..=total.div_ceil(2));
    let final_set: HashSet<(u32, u32)> = rand::seq::index::sample(rng, total, count)
        .iter()
        .map(|i| (i as u32 / n_e, i as u32 % n_e))
        .collect();
    position_independent_spec(pursuer, evader, move |j| {
        final_set.contains(&(j.pursuer.0, j.evader.0))
    })
}

/// A random game whose move lists may depend on the whole joint position:
/// every (position, opponent position) pair gets its own nonempty move list.
pub fn random_dependent_spec(rng: &mut ChaCha8Rng) -> GameSpec {
    let n_p = rng.random_range(2..=100u32);
    let n_e = rng.random_range(2..=(10_000 / n_p).min(100));

    let mut table = |n_to: u32| -> Vec<Vec<Vec<PositionId>>> {
        (0..n_p)
            .map(|_| {
                (0..n_e)
                    .map(|_| {
                        let count = rng.random_range(1..=n_to.min(4)) as usize;
                        let mut list: Vec<u32> = rand::seq::index::sample(
                            rng,
                            n_to as usize,
                            count,
                        )
                        .iter()
                        .map(|i| i as u32)
                        .collect();
                        list.sort_unstable();
                        list.into_iter().map(PositionId).collect()
                    })
                    .collect()
            })
            .collect()
    };
    let pursuer_table = table(n_p);
    let evader_table = table(n_e);
    let final_set = random_final_set(rng, n_p, n_e);

    GameSpec::builder(n_p, n_e)
        .final_positions(move |j| final_set.contains(&(j.pursuer.0, j.evader.0)))
        .pursuer_moves(move |j| {
            pursuer_table[j.pursuer.0 as usize][j.evader.0 as usize].clone()
        })
        .evader_moves(move |j| {
            evader_table[j.pursuer.0 as usize][j.evader.0 as usize].clone()
        })
        .build()
}

/// A position-independent game whose pursuer digraph is strongly connected
/// (it contains a full cycle) and whose starts form a rectangle X × P_E for
/// a random nonempty X.
pub fn random_sc_rectangle_spec(rng: &mut ChaCha8Rng, max_side: u32) -> GameSpec {
    let n_p = rng.random_range(2..=max_side);
    let n_e = rng.random_range(2..=max_side);
    let mut pursuer = random_digraph_with_loops(rng, n_p);
    for u in 0..n_p {
        pursuer.add_arc(u, (u + 1) % n_p);
    }
    let evader = random_digraph_with_loops(rng, n_e);
    let final_set = random_final_set(rng, n_p, n_e);

    let mut starts: Vec<u32> = (0..n_p)
        .filter(|_| rng.random_bool(0.5))
        .collect();
    if starts.is_empty() {
        starts.push(rng.random_range(0..n_p));
    }

    GameSpec::builder(n_p, n_e)
        .initial_pursuer(starts)
        .final_positions(move |j| final_set.contains(&(j.pursuer.0, j.evader.0)))
        .pursuer_moves(move |j| {
            pursuer
                .out_neighbors(j.pursuer)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .evader_moves(move |j| {
            evader
                .out_neighbors(j.evader)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .position_independent_hint(true)
        .build()
}
