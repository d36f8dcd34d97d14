//! Relational solving: catch ranks over position pairs.
//!
//! The rank of an Evader position q against a Pursuer position p is the
//! number of rounds within which the Pursuer, already placed and about to
//! receive the Evader's move, can force the game to end: rank zero exactly
//! when (p,q) is already final, and rank at most i when the pair occurs with
//! the Evader to move and every Evader move x either lands in a final pair or
//! can be answered by a Pursuer move w with the rank of x against w below i.
//! Ranks grow by sweeps until they stabilize; everything else in the module
//! is read off the stabilized table.

use crate::digraph::{LabelTable, StateDigraph};
use crate::error::EngineError;
use crate::game::{FinalCheckTiming, GameSpec, JointPosition, PositionId, Turn, Winner};
use crate::value::GameValue;

/// Stabilized catch ranks for every (evader position, pursuer position) pair.
pub struct RelationTable {
    pursuer_positions: u32,
    evader_positions: u32,
    /// Indexed evader-major: `evader * pursuer_positions + pursuer`.
    ranks: Vec<GameValue>,
    stabilization_index: u32,
}

impl RelationTable {
    pub fn pursuer_position_count(&self) -> u32 {
        self.pursuer_positions
    }

    pub fn evader_position_count(&self) -> u32 {
        self.evader_positions
    }

    /// Rank of an Evader position against a Pursuer position.
    pub fn rank(&self, evader: PositionId, pursuer: PositionId) -> GameValue {
        self.ranks[evader.0 as usize * self.pursuer_positions as usize + pursuer.0 as usize]
    }

    /// Whether the Evader position is caught within `i` rounds — rank at
    /// most `i`.
    pub fn related_at(&self, evader: PositionId, pursuer: PositionId, i: u32) -> bool {
        match self.rank(evader, pursuer) {
            GameValue::Finite(r) => r <= i,
            GameValue::Infinite => false,
        }
    }

    /// The sweep index after which nothing changed any more: every finite
    /// rank is at most this.
    pub fn stabilization_index(&self) -> u32 {
        self.stabilization_index
    }
}

/// Compute the catch ranks of a game by sweeping until stabilization.
///
/// Sweep i assigns rank i to every still-unranked pair that satisfies the
/// round condition using the ranks below i; reading the live table is safe
/// because same-sweep assignments equal i and the condition requires strictly
/// less. Only every-step finality is supported: the round condition checks
/// final pairs at both half-moves.
pub fn compute_relations(spec: &GameSpec) -> Result<RelationTable, EngineError> {
    if spec.timing() != FinalCheckTiming::EveryStep {
        return Err(EngineError::InvalidParameter(
            "relational solving requires every-step final checks".to_string(),
        ));
    }
    let n_p = spec.pursuer_position_count() as usize;
    let n_e = spec.evader_position_count() as usize;
    let joint = |p: usize, q: usize| JointPosition::new(p as u32, q as u32);

    let mut final_at = vec![false; n_p * n_e];
    for p in 0..n_p {
        for q in 0..n_e {
            final_at[p * n_e + q] = spec.is_final(joint(p, q));
        }
    }

    // Pairs that occur with the Evader to move: only they can earn a
    // positive rank.
    let mut occurs = vec![false; n_p * n_e];
    for state in spec.reachable_states()? {
        if state.turn == Turn::Evader {
            occurs[state.position.pursuer.0 as usize * n_e + state.position.evader.0 as usize] =
                true;
        }
    }

    // Move lists are cached on first use; move functions may be costly.
    let mut evader_moves: Vec<Option<Vec<u32>>> = vec![None; n_p * n_e];
    let mut pursuer_moves: Vec<Option<Vec<u32>>> = vec![None; n_p * n_e];

    let mut ranks = vec![GameValue::Infinite; n_e * n_p];
    for p in 0..n_p {
        for q in 0..n_e {
            if final_at[p * n_e + q] {
                ranks[q * n_p + p] = GameValue::ZERO;
            }
        }
    }

    // Once some Pursuer answer at (p,x) reaches a ranked pair, it keeps
    // working at every later sweep; remember that instead of rescanning.
    let mut answered = vec![false; n_p * n_e];

    let mut stabilization_index = 0u32;
    let mut sweep = 1u32;
    loop {
        let mut assigned = false;
        for p in 0..n_p {
            for q in 0..n_e {
                if ranks[q * n_p + p].is_finite() || !occurs[p * n_e + q] {
                    continue;
                }
                let moves = evader_moves[p * n_e + q].get_or_insert_with(|| {
                    spec.evader_moves(joint(p, q)).iter().map(|m| m.0).collect()
                });
                let mut caught = true;
                for &x in moves.iter() {
                    let x = x as usize;
                    if final_at[p * n_e + x] || answered[p * n_e + x] {
                        continue;
                    }
                    let replies = pursuer_moves[p * n_e + x].get_or_insert_with(|| {
                        spec.pursuer_moves(joint(p, x)).iter().map(|m| m.0).collect()
                    });
                    let works = replies.iter().any(|&w| match ranks[x * n_p + w as usize] {
                        GameValue::Finite(r) => r < sweep,
                        GameValue::Infinite => false,
                    });
                    if works {
                        answered[p * n_e + x] = true;
                    } else {
                        caught = false;
                        break;
                    }
                }
                if caught {
                    ranks[q * n_p + p] = GameValue::Finite(sweep);
                    assigned = true;
                }
            }
        }
        if !assigned {
            break;
        }
        stabilization_index = sweep;
        sweep += 1;
    }

    Ok(RelationTable {
        pursuer_positions: n_p as u32,
        evader_positions: n_e as u32,
        ranks,
        stabilization_index,
    })
}

/// Moves the Pursuer needs from start (p,q): the pair's own rank when it is
/// finite, otherwise one move to the best reply plus that reply's rank.
fn start_length(spec: &GameSpec, relations: &RelationTable, p: PositionId, q: PositionId) -> GameValue {
    let own = relations.rank(q, p);
    if own.is_finite() {
        return own;
    }
    spec.pursuer_moves(JointPosition { pursuer: p, evader: q })
        .into_iter()
        .map(|w| relations.rank(q, w))
        .min()
        .map(GameValue::plus_one)
        .unwrap_or(GameValue::Infinite)
}

/// Whether a Pursuer start wins outright: every allowed Evader answer is
/// either already final or has a Pursuer reply of finite rank.
fn start_wins(spec: &GameSpec, relations: &RelationTable, p: PositionId) -> bool {
    let answers = spec.initial_evader(p);
    !answers.is_empty()
        && answers.into_iter().all(|q| {
            let position = JointPosition { pursuer: p, evader: q };
            spec.is_final(position)
                || spec
                    .pursuer_moves(position)
                    .into_iter()
                    .any(|w| relations.rank(q, w).is_finite())
        })
}

/// Best winning start by the relational reading: among the starts that win,
/// the one whose worst allowed answer needs the fewest Pursuer moves, ties
/// toward the least index.
fn best_start(spec: &GameSpec, relations: &RelationTable) -> Option<(GameValue, PositionId)> {
    let mut best: Option<(GameValue, PositionId)> = None;
    for &p in spec.initial_pursuer() {
        if !start_wins(spec, relations, p) {
            continue;
        }
        let worst = spec
            .initial_evader(p)
            .into_iter()
            .map(|q| start_length(spec, relations, p, q))
            .max()
            .unwrap_or(GameValue::Infinite);
        if best.map(|(v, _)| worst < v).unwrap_or(true) {
            best = Some((worst, p));
        }
    }
    best
}

/// Decide the winner from the rank table: the Pursuer wins iff some start
/// wins against every allowed answer. Returns the best winning start as the
/// witness.
pub fn pursuer_wins_relational(
    spec: &GameSpec,
    relations: &RelationTable,
) -> (Winner, Option<PositionId>) {
    match best_start(spec, relations) {
        Some((_, p)) => (Winner::Pursuer, Some(p)),
        None => (Winner::Evader, None),
    }
}

/// Pursuer moves needed under optimal play from the best start, by the rank
/// table; infinite when no start wins.
pub fn game_length(spec: &GameSpec, relations: &RelationTable) -> GameValue {
    match best_start(spec, relations) {
        Some((value, _)) => value,
        None => GameValue::Infinite,
    }
}

/// A state where labels and ranks tell different stories.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LabelRankViolation {
    pub state: crate::game::GameState,
    pub label: GameValue,
    pub rank: GameValue,
    pub expected_rank: GameValue,
}

/// Cross-check the two engines: at every Evader-turn state, the rank of the
/// pair must equal the state's label converted to rounds — zero stays zero,
/// a finite label k becomes ceil(k/2), infinite stays infinite. Returns every
/// disagreement; an empty result means the tables are consistent.
pub fn check_label_rank_consistency(
    digraph: &StateDigraph,
    labels: &LabelTable,
    relations: &RelationTable,
) -> Vec<LabelRankViolation> {
    let mut violations = Vec::new();
    for i in 0..digraph.state_count() {
        let state = digraph.state(i);
        if state.turn != Turn::Evader {
            continue;
        }
        let label = labels.label(i);
        let expected_rank = label.ceil_half();
        let rank = relations.rank(state.position.evader, state.position.pursuer);
        if rank != expected_rank {
            violations.push(LabelRankViolation {
                state,
                label,
                rank,
                expected_rank,
            });
        }
    }
    violations
}
