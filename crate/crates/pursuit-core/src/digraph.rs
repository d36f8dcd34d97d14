//! State digraph construction and retrograde labelling.
//!
//! The digraph has one node per reachable state and one arc per legal move;
//! terminal states keep no outgoing arcs. Labels give the total number of
//! moves optimal play needs to finish from each state: zero exactly at
//! terminal states, one more than the least successor label where the Pursuer
//! moves, one more than the greatest where the Evader moves, and infinite
//! where the Evader can keep the game going forever.

use crate::error::EngineError;
use crate::game::{GameSpec, GameState, JointPosition, PositionId, Turn, Winner};
use crate::value::GameValue;
use std::collections::{BTreeMap, HashMap, VecDeque};

/// The reachable states of a game and the moves between them.
pub struct StateDigraph {
    states: Vec<GameState>,
    successors: Vec<Vec<usize>>,
    terminal: Vec<bool>,
}

impl StateDigraph {
    /// All states, sorted by (pursuer, evader, turn).
    pub fn states(&self) -> &[GameState] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn arc_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn state(&self, index: usize) -> GameState {
        self.states[index]
    }

    pub fn state_index(&self, state: &GameState) -> Option<usize> {
        self.states.binary_search(state).ok()
    }

    /// Successor indices of a state, in move order. Empty for terminal states.
    pub fn successors(&self, index: usize) -> &[usize] {
        &self.successors[index]
    }

    pub fn is_terminal(&self, index: usize) -> bool {
        self.terminal[index]
    }
}

/// Build the state digraph of a game: explore the reachable states, mark the
/// terminal ones, and record every move as an arc.
pub fn build_state_digraph(spec: &GameSpec) -> Result<StateDigraph, EngineError> {
    let states = spec.reachable_states()?;
    let index: HashMap<GameState, usize> =
        states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let terminal: Vec<bool> = states.iter().map(|s| spec.is_terminal(s)).collect();
    let successors: Vec<Vec<usize>> = states
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if terminal[i] {
                Vec::new()
            } else {
                spec.successors(*s).iter().map(|t| index[t]).collect()
            }
        })
        .collect();
    Ok(StateDigraph {
        states,
        successors,
        terminal,
    })
}

/// Move-count labels for every state of a digraph, indexed like its states.
pub struct LabelTable {
    labels: Vec<GameValue>,
}

impl LabelTable {
    pub fn label(&self, index: usize) -> GameValue {
        self.labels[index]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = GameValue> + '_ {
        self.labels.iter().copied()
    }

    /// Label of a state, if it is in the digraph.
    pub fn by_state(&self, digraph: &StateDigraph, state: &GameState) -> Option<GameValue> {
        digraph.state_index(state).map(|i| self.labels[i])
    }
}

/// Label every state by counting down from the terminal states.
///
/// The queue is seeded with the terminal states at label zero and processed
/// first-in first-out, so states come off it in nondecreasing label order. A
/// Pursuer-turn predecessor is labelled the first time any successor is
/// labelled (that successor has the least label); an Evader-turn predecessor
/// counts down its unlabelled successors and is labelled when the last one
/// resolves (that one has the greatest). States never reached this way keep
/// the infinite label: from them the Evader can always move to another
/// unlabelled state. Runs in time linear in the number of arcs.
pub fn compute_labels(digraph: &StateDigraph) -> LabelTable {
    let n = digraph.state_count();
    let mut predecessors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for &j in digraph.successors(i) {
            predecessors[j].push(i);
        }
    }
    let mut remaining: Vec<usize> = (0..n).map(|i| digraph.successors(i).len()).collect();
    let mut labels: Vec<GameValue> = vec![GameValue::Infinite; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for (i, label) in labels.iter_mut().enumerate() {
        if digraph.is_terminal(i) {
            *label = GameValue::ZERO;
            queue.push_back(i);
        }
    }
    while let Some(j) = queue.pop_front() {
        let next = labels[j].plus_one();
        for &i in &predecessors[j] {
            if labels[i].is_finite() {
                continue;
            }
            match digraph.state(i).turn {
                Turn::Pursuer => {
                    labels[i] = next;
                    queue.push_back(i);
                }
                Turn::Evader => {
                    remaining[i] -= 1;
                    if remaining[i] == 0 {
                        labels[i] = next;
                        queue.push_back(i);
                    }
                }
            }
        }
    }
    LabelTable { labels }
}

/// Outcome of solving a game through the state digraph.
pub struct Solution {
    pub winner: Winner,
    /// Pursuer moves needed from the best start against best defence.
    pub value: GameValue,
    /// Least-index start among those achieving `value`, if the Pursuer wins.
    pub best_start: Option<PositionId>,
    pub digraph: StateDigraph,
    pub labels: LabelTable,
}

/// Build the digraph, label it, and aggregate over the allowed starts.
///
/// A start state with label k costs the Pursuer one move out of every two,
/// rounded up, so k total moves convert to ceil(k/2) Pursuer moves. The
/// Evader answers each Pursuer start with the worst allowed reply; the
/// Pursuer picks the start with the least such worst case, ties going to the
/// smallest position index.
pub fn solve(spec: &GameSpec) -> Result<Solution, EngineError> {
    let digraph = build_state_digraph(spec)?;
    let labels = compute_labels(&digraph);
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
            let label = labels
                .by_state(&digraph, &start)
                .expect("start states are reachable by definition");
            worst = worst.max(label.ceil_half());
        }
        if worst < value {
            value = worst;
            best_start = Some(p);
        }
    }
    let winner = if value.is_finite() && best_start.is_some() {
        Winner::Pursuer
    } else {
        Winner::Evader
    };
    Ok(Solution {
        winner,
        value: if winner == Winner::Pursuer { value } else { GameValue::Infinite },
        best_start: if winner == Winner::Pursuer { best_start } else { None },
        digraph,
        labels,
    })
}

/// A positional strategy: one chosen successor per covered state.
#[derive(Clone, Debug, Default)]
pub struct Strategy {
    moves: BTreeMap<GameState, GameState>,
}

impl Strategy {
    pub fn from_moves(moves: BTreeMap<GameState, GameState>) -> Strategy {
        Strategy { moves }
    }

    pub fn next(&self, state: &GameState) -> Option<GameState> {
        self.moves.get(state).copied()
    }

    pub fn moves(&self) -> &BTreeMap<GameState, GameState> {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Read optimal positional strategies off a labelled digraph.
///
/// The Pursuer, at a non-terminal state of its turn, moves to a successor of
/// least label; when its state is infinite every move is equally hopeless and
/// the first one stands in. The Evader moves to a successor of greatest
/// label, which at infinite states means an infinite successor — one always
/// exists there, and play continues forever. All ties break toward the
/// smallest successor state, keeping extraction deterministic. Against the
/// extracted Pursuer strategy the label strictly decreases every move from
/// any finite state, whatever the Evader does, so capture arrives within the
/// starting label's total move count.
pub fn extract_strategies(digraph: &StateDigraph, labels: &LabelTable) -> (Strategy, Strategy) {
    let mut pursuer = BTreeMap::new();
    let mut evader = BTreeMap::new();
    for i in 0..digraph.state_count() {
        if digraph.is_terminal(i) || digraph.successors(i).is_empty() {
            continue;
        }
        let state = digraph.state(i);
        let pick = |prefer_max: bool| -> usize {
            let mut best = digraph.successors(i)[0];
            for &j in &digraph.successors(i)[1..] {
                let better = if prefer_max {
                    labels.label(j) > labels.label(best)
                } else {
                    labels.label(j) < labels.label(best)
                };
                if better || (labels.label(j) == labels.label(best) && digraph.state(j) < digraph.state(best)) {
                    best = j;
                }
            }
            best
        };
        match state.turn {
            Turn::Pursuer => {
                pursuer.insert(state, digraph.state(pick(false)));
            }
            Turn::Evader => {
                evader.insert(state, digraph.state(pick(true)));
            }
        }
    }
    (Strategy { moves: pursuer }, Strategy { moves: evader })
}

/// How a traced play ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TraceOutcome {
    /// Play reached a terminal state after this many Pursuer moves.
    PursuerWins { pursuer_moves: u32 },
    /// The move cutoff elapsed without reaching a terminal state.
    CutoffReached,
}

/// A played-out game: the visited states in order and how it ended.
#[derive(Clone, Debug)]
pub struct PlayTrace {
    /// Visited states, starting with the start state; one entry per move
    /// after the first.
    pub states: Vec<GameState>,
    pub outcome: TraceOutcome,
}

/// A trace cutoff that no winning play can hit: a Pursuer playing optimally
/// strictly decreases the label every move, so any win takes fewer total
/// moves than there are states.
pub fn default_trace_cutoff(digraph: &StateDigraph) -> u32 {
    u32::try_from(digraph.state_count())
        .unwrap_or(u32::MAX)
        .saturating_add(1)
}

/// Play the game out from a start, both sides following the given
/// strategies, for at most `cutoff` moves.
///
/// The start must be an allowed initial pair. Errors if a strategy has no
/// move at a reached non-terminal state.
pub fn play_trace(
    spec: &GameSpec,
    pursuer: &Strategy,
    evader: &Strategy,
    start: JointPosition,
    cutoff: u32,
) -> Result<PlayTrace, EngineError> {
    if !spec.initial_pursuer().contains(&start.pursuer)
        || !spec.initial_evader(start.pursuer).contains(&start.evader)
    {
        return Err(EngineError::StartNotAllowed {
            pursuer: start.pursuer.0,
            evader: start.evader.0,
        });
    }
    let mut state = GameState::new(start, Turn::Pursuer);
    let mut states = vec![state];
    let mut pursuer_moves = 0u32;
    let mut moves = 0u32;
    loop {
        if spec.is_terminal(&state) {
            return Ok(PlayTrace {
                states,
                outcome: TraceOutcome::PursuerWins { pursuer_moves },
            });
        }
        if moves >= cutoff {
            return Ok(PlayTrace {
                states,
                outcome: TraceOutcome::CutoffReached,
            });
        }
        let strategy = match state.turn {
            Turn::Pursuer => pursuer,
            Turn::Evader => evader,
        };
        let next = strategy
            .next(&state)
            .ok_or(EngineError::StrategyUndefined { state })?;
        if state.turn == Turn::Pursuer {
            pursuer_moves += 1;
        }
        moves += 1;
        state = next;
        states.push(state);
    }
}
