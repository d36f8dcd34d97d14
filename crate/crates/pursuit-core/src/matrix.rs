//! Matrix solving for position-independent games.
//!
//! When each player's moves depend only on their own position, the whole game
//! collapses onto a matrix indexed by (pursuer position, evader position).
//! An entry is 0 where the pair is final, and i when every Evader move x from
//! the pair either lands in a final pair or can be answered by a Pursuer move
//! y with entry(y,x) below i. The stabilized matrix carries the same
//! information as the rank table, computed without touching the state space.

use crate::error::EngineError;
use crate::game::{FinalCheckTiming, GameSpec, JointPosition, PositionId, Winner};
use crate::position::{derive_position_digraphs, is_strongly_connected};
use crate::value::GameValue;
use std::collections::HashSet;

/// The stabilized matrix of a position-independent game.
pub struct RelationMatrix {
    pursuer_positions: u32,
    evader_positions: u32,
    /// Indexed pursuer-major: `pursuer * evader_positions + evader`.
    entries: Vec<GameValue>,
}

impl RelationMatrix {
    pub fn pursuer_position_count(&self) -> u32 {
        self.pursuer_positions
    }

    pub fn evader_position_count(&self) -> u32 {
        self.evader_positions
    }

    pub fn entry(&self, pursuer: PositionId, evader: PositionId) -> GameValue {
        self.entries[pursuer.0 as usize * self.evader_positions as usize + evader.0 as usize]
    }

    pub fn finite_count(&self) -> usize {
        self.entries.iter().filter(|v| v.is_finite()).count()
    }

    pub fn is_all_finite(&self) -> bool {
        self.entries.iter().all(|v| v.is_finite())
    }
}

/// Fill the matrix of a position-independent, every-step game by sweeping
/// until stabilization. Sweep i assigns i to every still-infinite entry whose
/// condition holds with entries strictly below i; reading the live matrix is
/// safe because same-sweep assignments equal i.
pub fn fill_relation_matrix(spec: &GameSpec) -> Result<RelationMatrix, EngineError> {
    if spec.timing() != FinalCheckTiming::EveryStep {
        return Err(EngineError::InvalidParameter(
            "matrix solving requires every-step final checks".to_string(),
        ));
    }
    let (g_p, g_e) = derive_position_digraphs(spec)?;
    let n_p = g_p.vertex_count() as usize;
    let n_e = g_e.vertex_count() as usize;

    let mut final_at = vec![false; n_p * n_e];
    for p in 0..n_p {
        for q in 0..n_e {
            final_at[p * n_e + q] = spec.is_final(JointPosition::new(p as u32, q as u32));
        }
    }

    let mut entries = vec![GameValue::Infinite; n_p * n_e];
    for (i, &f) in final_at.iter().enumerate() {
        if f {
            entries[i] = GameValue::ZERO;
        }
    }

    // Once some Pursuer answer at (p,x) reaches a filled entry it keeps
    // working at every later sweep; remember that instead of rescanning.
    let mut answered = vec![false; n_p * n_e];

    let mut sweep = 1u32;
    loop {
        let mut assigned = false;
        for p in 0..n_p {
            for q in 0..n_e {
                if entries[p * n_e + q].is_finite() {
                    continue;
                }
                let mut caught = true;
                for &x in g_e.out_neighbors(PositionId(q as u32)) {
                    let x = x as usize;
                    if final_at[p * n_e + x] || answered[p * n_e + x] {
                        continue;
                    }
                    let works = g_p.out_neighbors(PositionId(p as u32)).iter().any(|&y| {
                        match entries[y as usize * n_e + x] {
                            GameValue::Finite(r) => r < sweep,
                            GameValue::Infinite => false,
                        }
                    });
                    if works {
                        answered[p * n_e + x] = true;
                    } else {
                        caught = false;
                        break;
                    }
                }
                if caught {
                    entries[p * n_e + q] = GameValue::Finite(sweep);
                    assigned = true;
                }
            }
        }
        if !assigned {
            break;
        }
        sweep += 1;
    }

    Ok(RelationMatrix {
        pursuer_positions: n_p as u32,
        evader_positions: n_e as u32,
        entries,
    })
}

/// Pursuer moves needed from start (p,q) by the matrix: the entry itself when
/// finite, otherwise one move to the best reply plus that reply's entry.
fn start_length(spec: &GameSpec, matrix: &RelationMatrix, p: PositionId, q: PositionId) -> GameValue {
    let own = matrix.entry(p, q);
    if own.is_finite() {
        return own;
    }
    spec.pursuer_moves(JointPosition { pursuer: p, evader: q })
        .into_iter()
        .map(|y| matrix.entry(y, q))
        .min()
        .map(GameValue::plus_one)
        .unwrap_or(GameValue::Infinite)
}

fn start_wins(spec: &GameSpec, matrix: &RelationMatrix, p: PositionId) -> bool {
    let answers = spec.initial_evader(p);
    !answers.is_empty()
        && answers.into_iter().all(|q| {
            let position = JointPosition { pursuer: p, evader: q };
            spec.is_final(position)
                || spec
                    .pursuer_moves(position)
                    .into_iter()
                    .any(|y| matrix.entry(y, q).is_finite())
        })
}

fn best_start(spec: &GameSpec, matrix: &RelationMatrix) -> Option<(GameValue, PositionId)> {
    let mut best: Option<(GameValue, PositionId)> = None;
    for &p in spec.initial_pursuer() {
        if !start_wins(spec, matrix, p) {
            continue;
        }
        let worst = spec
            .initial_evader(p)
            .into_iter()
            .map(|q| start_length(spec, matrix, p, q))
            .max()
            .unwrap_or(GameValue::Infinite);
        if best.map(|(v, _)| worst < v).unwrap_or(true) {
            best = Some((worst, p));
        }
    }
    best
}

/// Decide the winner from the matrix: the Pursuer wins iff some allowed
/// start wins against every allowed answer. Returns the best winning start.
pub fn matrix_winner(spec: &GameSpec, matrix: &RelationMatrix) -> (Winner, Option<PositionId>) {
    match best_start(spec, matrix) {
        Some((_, p)) => (Winner::Pursuer, Some(p)),
        None => (Winner::Evader, None),
    }
}

/// Pursuer moves needed under optimal play from the best start, by the
/// matrix; infinite when no start wins.
pub fn matrix_game_length(spec: &GameSpec, matrix: &RelationMatrix) -> GameValue {
    match best_start(spec, matrix) {
        Some((value, _)) => value,
        None => GameValue::Infinite,
    }
}

/// Diagnostic row aggregation: the greatest, over Pursuer positions, of the
/// least entry in the row. Not a game length — the least entry of a row is
/// usually a pair the Evader would never choose — but occasionally useful
/// when eyeballing a matrix.
pub fn matrix_row_maximin(matrix: &RelationMatrix) -> GameValue {
    let n_e = matrix.evader_positions;
    let mut worst = GameValue::ZERO;
    for p in 0..matrix.pursuer_positions {
        let row_min = (0..n_e)
            .map(|q| matrix.entry(PositionId(p), PositionId(q)))
            .min()
            .unwrap_or(GameValue::ZERO);
        worst = worst.max(row_min);
    }
    worst
}

/// Decide the winner of a game with all-pairs starts and a strongly
/// connected Pursuer digraph: the Pursuer wins iff the matrix is finite
/// everywhere. Errors if either precondition fails.
pub fn full_relation_winner(
    spec: &GameSpec,
    matrix: &RelationMatrix,
) -> Result<(Winner, Option<PositionId>), EngineError> {
    let (g_p, _) = derive_position_digraphs(spec)?;
    if !is_strongly_connected(&g_p) {
        return Err(EngineError::NotStronglyConnected);
    }
    let n_e = spec.evader_position_count();
    let all_evader: Vec<PositionId> = (0..n_e).map(PositionId).collect();
    let rectangular = !spec.initial_pursuer().is_empty()
        && spec
            .initial_pursuer()
            .iter()
            .all(|&p| spec.initial_evader(p) == all_evader);
    if !rectangular {
        return Err(EngineError::InitialNotRectangular);
    }
    if matrix.is_all_finite() {
        let (_, witness) = matrix_winner(spec, matrix);
        Ok((Winner::Pursuer, witness))
    } else {
        Ok((Winner::Evader, None))
    }
}

/// An order in which position pairs can be retired: each pair is final or
/// covered by earlier pairs, so the list doubles as a certificate that the
/// Pursuer wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovableOrdering {
    /// Pairs in removal order.
    pub pairs: Vec<JointPosition>,
    /// Best winning start of the game the ordering certifies.
    pub witness: PositionId,
}

/// Order the finite entries of the matrix for removal: by entry, then by
/// pursuer and evader index. A pair with entry i only needs pairs with
/// entries below i already removed, and those all sort earlier. Returns
/// `None` when the matrix says the Pursuer loses, since no certificate
/// exists then.
pub fn extract_removable_ordering(
    spec: &GameSpec,
    matrix: &RelationMatrix,
) -> Option<RemovableOrdering> {
    let (winner, witness) = matrix_winner(spec, matrix);
    if winner != Winner::Pursuer {
        return None;
    }
    let mut entries: Vec<(u32, JointPosition)> = Vec::new();
    for p in 0..matrix.pursuer_position_count() {
        for q in 0..matrix.evader_position_count() {
            if let GameValue::Finite(i) = matrix.entry(PositionId(p), PositionId(q)) {
                entries.push((i, JointPosition::new(p, q)));
            }
        }
    }
    entries.sort_by_key(|&(i, j)| (i, j.pursuer, j.evader));
    Some(RemovableOrdering {
        pairs: entries.into_iter().map(|(_, j)| j).collect(),
        witness: witness.expect("a winning game has a winning start"),
    })
}

/// Check a removal ordering from scratch, sharing nothing with the
/// extraction: walking the list, every pair must be final or have all Evader
/// moves answered into the already-removed prefix, and no pair may repeat.
pub fn verify_removable_ordering(spec: &GameSpec, ordering: &RemovableOrdering) -> bool {
    let mut removed: HashSet<(u32, u32)> = HashSet::new();
    for &pair in &ordering.pairs {
        if removed.contains(&(pair.pursuer.0, pair.evader.0)) {
            return false;
        }
        let ok = spec.is_final(pair)
            || spec.evader_moves(pair).into_iter().all(|x| {
                let moved = JointPosition {
                    pursuer: pair.pursuer,
                    evader: x,
                };
                spec.is_final(moved)
                    || spec
                        .pursuer_moves(moved)
                        .into_iter()
                        .any(|y| removed.contains(&(y.0, x.0)))
            });
        if !ok {
            return false;
        }
        removed.insert((pair.pursuer.0, pair.evader.0));
    }
    true
}
