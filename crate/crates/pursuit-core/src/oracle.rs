//! Reference solver used to cross-check the production engines.
//!
//! Everything here is deliberately independent of the engine modules: the
//! oracle enumerates states with its own breadth-first walk, applies the
//! finality timing itself, and evaluates the game by plain budgeted minimax
//! rather than retrograde labelling. Slow but simple; it is the yardstick the
//! engines are measured against in tests.

use crate::error::EngineError;
use crate::game::{FinalCheckTiming, GameSpec, GameState, JointPosition, PositionId, Turn, Winner};
use crate::value::GameValue;
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Default cap on the oracle's own state enumeration. The oracle is meant for
/// small cross-check instances, so this is far below the engine default.
pub const DEFAULT_ORACLE_CAPACITY: usize = 200_000;

/// Result of a full oracle evaluation.
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub winner: Winner,
    /// Pursuer moves needed from the best start against best defence.
    pub value: GameValue,
    /// Least-index start among those achieving `value`, if the Pursuer wins.
    pub best_start: Option<PositionId>,
    /// For every reachable state, the least Pursuer-move budget with which
    /// the Pursuer forces a win from it; infinite where the Evader survives.
    pub pursuer_move_bounds: BTreeMap<GameState, GameValue>,
    pub state_count: usize,
}

/// The game ends at this state: its position is final and the timing admits a
/// check at this point in play. A state with the Pursuer to move follows an
/// Evader move or the initial placement; one with the Evader to move follows
/// a Pursuer move.
fn oracle_terminal(spec: &GameSpec, state: &GameState) -> bool {
    if !spec.is_final(state.position) {
        return false;
    }
    match spec.timing() {
        FinalCheckTiming::EveryStep => true,
        FinalCheckTiming::AfterEvaderMove => state.turn == Turn::Pursuer,
        FinalCheckTiming::AfterPursuerMove => state.turn == Turn::Evader,
    }
}

fn oracle_successors(spec: &GameSpec, state: &GameState) -> Vec<GameState> {
    match state.turn {
        Turn::Pursuer => spec
            .pursuer_moves(state.position)
            .into_iter()
            .map(|w| GameState::new(JointPosition { pursuer: w, evader: state.position.evader }, Turn::Evader))
            .collect(),
        Turn::Evader => spec
            .evader_moves(state.position)
            .into_iter()
            .map(|x| GameState::new(JointPosition { pursuer: state.position.pursuer, evader: x }, Turn::Pursuer))
            .collect(),
    }
}

/// Breadth-first closure of the allowed starts, independent of the engines'
/// exploration. Returns the states sorted in canonical order.
fn oracle_enumerate(spec: &GameSpec, capacity: usize) -> Result<Vec<GameState>, EngineError> {
    let mut seen: HashMap<GameState, ()> = HashMap::new();
    let mut queue: VecDeque<GameState> = VecDeque::new();
    for position in spec.initial_pairs() {
        let state = GameState::new(position, Turn::Pursuer);
        if seen.insert(state, ()).is_none() {
            queue.push_back(state);
        }
    }
    if seen.len() > capacity {
        return Err(EngineError::CapacityExceeded { limit: capacity });
    }
    while let Some(state) = queue.pop_front() {
        if oracle_terminal(spec, &state) {
            continue;
        }
        for next in oracle_successors(spec, &state) {
            if seen.insert(next, ()).is_none() {
                if seen.len() > capacity {
                    return Err(EngineError::CapacityExceeded { limit: capacity });
                }
                queue.push_back(next);
            }
        }
    }
    let mut states: Vec<GameState> = seen.into_keys().collect();
    states.sort_unstable();
    Ok(states)
}

/// Evaluate the game by budgeted minimax with [`DEFAULT_ORACLE_CAPACITY`].
pub fn oracle_solve(spec: &GameSpec) -> Result<OracleOutcome, EngineError> {
    oracle_solve_with_capacity(spec, DEFAULT_ORACLE_CAPACITY)
}

/// Evaluate the game by budgeted minimax.
///
/// The budget counts Pursuer moves. Wins are computed level by level: with
/// budget m, a terminal state wins outright, a Pursuer-turn state wins iff
/// some successor wins with budget m-1, and an Evader-turn state wins iff
/// every successor wins with budget m — an Evader move spends nothing, so in
/// particular an Evader-turn state whose every answer is terminal already
/// wins with budget 0. Because a move always hands the turn over, each level
/// needs exactly one pass over the Pursuer-turn states followed by one over
/// the Evader-turn states, and the iteration stops at the first level that
/// adds nothing. Each state records the least sufficient budget, which is
/// exactly the number of Pursuer moves optimal play needs from it.
pub fn oracle_solve_with_capacity(
    spec: &GameSpec,
    capacity: usize,
) -> Result<OracleOutcome, EngineError> {
    let states = oracle_enumerate(spec, capacity)?;
    let index: HashMap<GameState, usize> =
        states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let terminal: Vec<bool> = states.iter().map(|s| oracle_terminal(spec, s)).collect();
    let successors: Vec<Vec<usize>> = states
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if terminal[i] {
                Vec::new()
            } else {
                oracle_successors(spec, s).iter().map(|t| index[t]).collect()
            }
        })
        .collect();

    let mut bound: Vec<Option<u32>> = terminal
        .iter()
        .map(|&t| if t { Some(0) } else { None })
        .collect();

    // Budget-0 wins beyond the terminals themselves: Evader-turn states whose
    // every answer is already terminal. Turns alternate, so one pass settles
    // them.
    for i in 0..states.len() {
        if bound[i].is_some() || states[i].turn != Turn::Evader {
            continue;
        }
        if !successors[i].is_empty() && successors[i].iter().all(|&j| bound[j].is_some()) {
            bound[i] = Some(0);
        }
    }

    let mut budget: u32 = 0;
    loop {
        budget += 1;
        let mut changed = false;
        // Pursuer-turn states first: they spend one unit of budget, so they
        // look at the Evader-turn results of the previous level.
        for i in 0..states.len() {
            if bound[i].is_some() || states[i].turn != Turn::Pursuer {
                continue;
            }
            if successors[i].iter().any(|&j| bound[j].is_some()) {
                bound[i] = Some(budget);
                changed = true;
            }
        }
        // Evader-turn states next: an Evader move is free, so they look at
        // the Pursuer-turn results of the same level.
        for i in 0..states.len() {
            if bound[i].is_some() || states[i].turn != Turn::Evader {
                continue;
            }
            if !successors[i].is_empty() && successors[i].iter().all(|&j| bound[j].is_some()) {
                bound[i] = Some(budget);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // Aggregate over the allowed starts: the Pursuer picks the start
    // minimizing the worst answer, the Evader answers with the worst one.
    let mut value = GameValue::Infinite;
    let mut best_start = None;
    for &p in spec.initial_pursuer() {
        let answers = spec.initial_evader(p);
        if answers.is_empty() {
            continue;
        }
        let mut worst = GameValue::ZERO;
        for q in answers {
            let start = GameState::new(JointPosition { pursuer: p, evader: q }, Turn::Pursuer);
            let b = match bound[index[&start]] {
                Some(m) => GameValue::Finite(m),
                None => GameValue::Infinite,
            };
            worst = worst.max(b);
        }
        if worst < value {
            value = worst;
            best_start = Some(p);
        }
    }

    let winner = if best_start.is_some() && value.is_finite() {
        Winner::Pursuer
    } else {
        Winner::Evader
    };
    let pursuer_move_bounds = states
        .iter()
        .zip(&bound)
        .map(|(s, b)| {
            (*s, b.map(GameValue::Finite).unwrap_or(GameValue::Infinite))
        })
        .collect();
    Ok(OracleOutcome {
        winner,
        value: if winner == Winner::Pursuer { value } else { GameValue::Infinite },
        best_start: if winner == Winner::Pursuer { best_start } else { None },
        pursuer_move_bounds,
        state_count: states.len(),
    })
}

/// Total-move labels computed by naive repeated sweeps, for cross-checking
/// the retrograde labelling engine.
///
/// Start every non-terminal state at infinity and terminal states at zero,
/// then resweep — a Pursuer-turn state becomes one more than the least
/// successor label, an Evader-turn state one more than the greatest — until
/// nothing changes. Updates only ever lower a label, and the finite labels
/// are bounded below, so the sweeps reach a fixed point.
pub fn naive_labels(spec: &GameSpec) -> Result<BTreeMap<GameState, GameValue>, EngineError> {
    let states = oracle_enumerate(spec, spec.state_capacity())?;
    let index: HashMap<GameState, usize> =
        states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let terminal: Vec<bool> = states.iter().map(|s| oracle_terminal(spec, s)).collect();
    let successors: Vec<Vec<usize>> = states
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if terminal[i] {
                Vec::new()
            } else {
                oracle_successors(spec, s).iter().map(|t| index[t]).collect()
            }
        })
        .collect();

    let mut label: Vec<GameValue> = terminal
        .iter()
        .map(|&t| if t { GameValue::ZERO } else { GameValue::Infinite })
        .collect();
    loop {
        let mut changed = false;
        for i in 0..states.len() {
            if terminal[i] {
                continue;
            }
            let over = successors[i].iter().map(|&j| label[j]);
            let best = match states[i].turn {
                Turn::Pursuer => over.min(),
                Turn::Evader => over.max(),
            };
            let new = best.map(GameValue::plus_one).unwrap_or(GameValue::Infinite);
            if new < label[i] {
                label[i] = new;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(states.into_iter().zip(label).collect())
}

/// Non-terminal Evader-turn states with their successor lists, in canonical
/// order: the choice points a positional Evader strategy must cover.
fn evader_choice_points(spec: &GameSpec) -> Result<Vec<(GameState, Vec<GameState>)>, EngineError> {
    let states = oracle_enumerate(spec, spec.state_capacity())?;
    Ok(states
        .into_iter()
        .filter(|s| s.turn == Turn::Evader && !oracle_terminal(spec, s))
        .map(|s| (s, oracle_successors(spec, &s)))
        .collect())
}

/// Number of positional Evader strategies: the product of the successor
/// counts over all non-terminal Evader-turn states.
pub fn count_evader_strategies(spec: &GameSpec) -> Result<u128, EngineError> {
    let mut count: u128 = 1;
    for (_, choices) in evader_choice_points(spec)? {
        count = count
            .checked_mul(choices.len() as u128)
            .ok_or_else(|| {
                EngineError::InvalidParameter(
                    "evader strategy count overflows a 128-bit counter".to_string(),
                )
            })?;
    }
    Ok(count)
}

/// Every positional Evader strategy, as a map from each non-terminal
/// Evader-turn state to the chosen successor. Errors if there are more than
/// `limit` strategies. Initial-placement choices are not part of a strategy;
/// callers range over the allowed starts separately.
pub fn enumerate_evader_strategies(
    spec: &GameSpec,
    limit: u64,
) -> Result<Vec<BTreeMap<GameState, GameState>>, EngineError> {
    let count = count_evader_strategies(spec)?;
    if count > u128::from(limit) {
        return Err(EngineError::StrategyLimit { count, limit });
    }
    let points = evader_choice_points(spec)?;
    if points.iter().any(|(_, choices)| choices.is_empty()) {
        // A choice point with no moves admits no strategy at all.
        return Ok(Vec::new());
    }
    let mut strategies = Vec::with_capacity(count as usize);
    let mut odometer = vec![0usize; points.len()];
    loop {
        strategies.push(
            points
                .iter()
                .zip(&odometer)
                .map(|((state, choices), &pick)| (*state, choices[pick]))
                .collect::<BTreeMap<_, _>>(),
        );
        // Advance the odometer; fall out once every digit has wrapped.
        let mut digit = points.len();
        loop {
            if digit == 0 {
                return Ok(strategies);
            }
            digit -= 1;
            odometer[digit] += 1;
            if odometer[digit] < points[digit].1.len() {
                break;
            }
            odometer[digit] = 0;
        }
    }
}
