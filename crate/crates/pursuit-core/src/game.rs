//! Game description: positions, states, move functions and reachability.
//!
//! A game runs on two finite position sets. Play starts with the Pursuer
//! picking an initial position, the Evader answering with one of the starts
//! allowed against it, and the two sides then moving alternately with the
//! Pursuer first. A move changes only the mover's own coordinate. The Pursuer
//! wins as soon as the joint position is final (subject to
//! [`FinalCheckTiming`]); the Evader wins by playing forever.

use crate::error::EngineError;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// Index of a single player's position. Ids are dense: `0..count`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PositionId(pub u32);

impl fmt::Display for PositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A joint position: where the Pursuer stands and where the Evader stands.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct JointPosition {
    pub pursuer: PositionId,
    pub evader: PositionId,
}

impl JointPosition {
    pub fn new(pursuer: u32, evader: u32) -> JointPosition {
        JointPosition {
            pursuer: PositionId(pursuer),
            evader: PositionId(evader),
        }
    }
}

impl fmt::Display for JointPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pursuer, self.evader)
    }
}

/// Whose move it is.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Turn {
    Pursuer,
    Evader,
}

impl Turn {
    pub fn other(self) -> Turn {
        match self {
            Turn::Pursuer => Turn::Evader,
            Turn::Evader => Turn::Pursuer,
        }
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Turn::Pursuer => write!(f, "P"),
            Turn::Evader => write!(f, "E"),
        }
    }
}

/// A joint position together with whose move it is.
///
/// The derived ordering — pursuer position, then evader position, then turn
/// (Pursuer before Evader) — is the canonical state order used everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GameState {
    pub position: JointPosition,
    pub turn: Turn,
}

impl GameState {
    pub fn new(position: JointPosition, turn: Turn) -> GameState {
        GameState { position, turn }
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.position, self.turn)
    }
}

/// When the "position is final" check ends the game.
///
/// `EveryStep` checks after the initial placement and after every move.
/// `AfterEvaderMove` checks after the placement and after Evader moves only:
/// the Pursuer stepping through a final position does not end the game, which
/// is the convention eternal-domination-style games need (the attacker's
/// challenge stands only if the guards fail to answer it). `AfterPursuerMove`
/// is the mirror image and performs no placement check, since placement ends
/// with the Evader's choice.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FinalCheckTiming {
    EveryStep,
    AfterEvaderMove,
    AfterPursuerMove,
}

/// Who wins a game.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Winner {
    Pursuer,
    Evader,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::Pursuer => write!(f, "Pursuer"),
            Winner::Evader => write!(f, "Evader"),
        }
    }
}

/// Default cap on explored states, shared by validation and the engines.
pub const DEFAULT_STATE_CAPACITY: usize = 50_000_000;

type PositionFn = Box<dyn Fn(PositionId) -> Vec<PositionId> + Send + Sync>;
type JointPredicate = Box<dyn Fn(JointPosition) -> bool + Send + Sync>;
type MoveFn = Box<dyn Fn(JointPosition) -> Vec<PositionId> + Send + Sync>;

/// Complete description of a game instance.
///
/// Move and finality functions are total over the declared position ranges;
/// the accessors return move lists deduplicated and sorted by index so that
/// every downstream computation is deterministic.
pub struct GameSpec {
    pursuer_positions: u32,
    evader_positions: u32,
    timing: FinalCheckTiming,
    position_independent_hint: bool,
    state_capacity: usize,
    initial_pursuer: Vec<PositionId>,
    initial_evader: PositionFn,
    final_positions: JointPredicate,
    pursuer_move_fn: MoveFn,
    evader_move_fn: MoveFn,
}

impl GameSpec {
    pub fn builder(pursuer_positions: u32, evader_positions: u32) -> GameSpecBuilder {
        GameSpecBuilder::new(pursuer_positions, evader_positions)
    }

    pub fn pursuer_position_count(&self) -> u32 {
        self.pursuer_positions
    }

    pub fn evader_position_count(&self) -> u32 {
        self.evader_positions
    }

    pub fn timing(&self) -> FinalCheckTiming {
        self.timing
    }

    /// Override the finality timing of an already-built game. Changing the
    /// timing changes which states end play, so results for one timing say
    /// nothing about another.
    pub fn set_timing(&mut self, timing: FinalCheckTiming) {
        self.timing = timing;
    }

    /// Whether the constructor believes move sets depend only on the mover's
    /// own position. Verified, not trusted, by
    /// [`crate::position::verify_position_independence`].
    pub fn claims_position_independent(&self) -> bool {
        self.position_independent_hint
    }

    pub fn state_capacity(&self) -> usize {
        self.state_capacity
    }

    pub fn set_state_capacity(&mut self, capacity: usize) {
        self.state_capacity = capacity;
    }

    /// Initial Pursuer choices, deduplicated and sorted.
    pub fn initial_pursuer(&self) -> &[PositionId] {
        &self.initial_pursuer
    }

    /// Evader starts allowed against the given Pursuer start, deduplicated
    /// and sorted.
    pub fn initial_evader(&self, pursuer: PositionId) -> Vec<PositionId> {
        normalize((self.initial_evader)(pursuer))
    }

    /// All allowed starting pairs in (pursuer, evader) order.
    pub fn initial_pairs(&self) -> Vec<JointPosition> {
        let mut pairs = Vec::new();
        for &p in &self.initial_pursuer {
            for e in self.initial_evader(p) {
                pairs.push(JointPosition {
                    pursuer: p,
                    evader: e,
                });
            }
        }
        pairs
    }

    pub fn is_final(&self, position: JointPosition) -> bool {
        (self.final_positions)(position)
    }

    /// Pursuer moves available at the given joint position, deduplicated and
    /// sorted. Each move replaces only the Pursuer coordinate.
    pub fn pursuer_moves(&self, position: JointPosition) -> Vec<PositionId> {
        normalize((self.pursuer_move_fn)(position))
    }

    /// Evader moves available at the given joint position, deduplicated and
    /// sorted. Each move replaces only the Evader coordinate.
    pub fn evader_moves(&self, position: JointPosition) -> Vec<PositionId> {
        normalize((self.evader_move_fn)(position))
    }

    /// Successor states of a state, in move order. Does not consult finality;
    /// callers decide whether the state is terminal via [`Self::is_terminal`].
    pub fn successors(&self, state: GameState) -> Vec<GameState> {
        match state.turn {
            Turn::Pursuer => self
                .pursuer_moves(state.position)
                .into_iter()
                .map(|w| GameState {
                    position: JointPosition {
                        pursuer: w,
                        evader: state.position.evader,
                    },
                    turn: Turn::Evader,
                })
                .collect(),
            Turn::Evader => self
                .evader_moves(state.position)
                .into_iter()
                .map(|x| GameState {
                    position: JointPosition {
                        pursuer: state.position.pursuer,
                        evader: x,
                    },
                    turn: Turn::Pursuer,
                })
                .collect(),
        }
    }

    /// Whether the game ends at this moment: the position is final and the
    /// timing admits a check right after `just_moved` made the move that
    /// produced it. The initial placement counts as an Evader move (the
    /// Evader places last).
    pub fn is_final_now(&self, state: &GameState, just_moved: Turn) -> bool {
        if !self.is_final(state.position) {
            return false;
        }
        match self.timing {
            FinalCheckTiming::EveryStep => true,
            FinalCheckTiming::AfterEvaderMove => just_moved == Turn::Evader,
            FinalCheckTiming::AfterPursuerMove => just_moved == Turn::Pursuer,
        }
    }

    /// Whether a state, as it occurs in play, is terminal. A state with the
    /// Pursuer to move was produced by an Evader move (or the placement); a
    /// state with the Evader to move was produced by a Pursuer move.
    pub fn is_terminal(&self, state: &GameState) -> bool {
        self.is_final_now(state, state.turn.other())
    }

    /// Check the game against the rules it must satisfy. An empty report
    /// means every reachable state is playable.
    ///
    /// Checked per reachable state: non-terminal states offer at least one
    /// move, and every move stays within the declared position range. Checked
    /// globally: there is at least one initial Pursuer position, each has at
    /// least one allowed Evader answer, and all starts are in range.
    pub fn validate(&self) -> Result<Vec<SpecDiagnostic>, EngineError> {
        let mut diagnostics = Vec::new();

        if self.initial_pursuer.is_empty() {
            diagnostics.push(SpecDiagnostic::NoInitialPursuer);
        }
        for &p in &self.initial_pursuer {
            if p.0 >= self.pursuer_positions {
                diagnostics.push(SpecDiagnostic::InitialOutOfRange { position: p });
                continue;
            }
            let answers = self.initial_evader(p);
            if answers.is_empty() {
                diagnostics.push(SpecDiagnostic::EmptyInitialEvader { pursuer: p });
            }
            for e in answers {
                if e.0 >= self.evader_positions {
                    diagnostics.push(SpecDiagnostic::InitialOutOfRange { position: e });
                }
            }
        }
        if !diagnostics.is_empty() {
            // Exploration below needs well-formed starts.
            return Ok(diagnostics);
        }

        for state in self.explore(true)? {
            if self.is_terminal(&state) {
                continue;
            }
            let moves = match state.turn {
                Turn::Pursuer => self.pursuer_moves(state.position),
                Turn::Evader => self.evader_moves(state.position),
            };
            if moves.is_empty() {
                diagnostics.push(SpecDiagnostic::EmptyMoveList { state });
            }
            let bound = match state.turn {
                Turn::Pursuer => self.pursuer_positions,
                Turn::Evader => self.evader_positions,
            };
            for m in moves {
                if m.0 >= bound {
                    diagnostics.push(SpecDiagnostic::MoveOutOfRange { state, target: m });
                }
            }
        }
        Ok(diagnostics)
    }

    /// All states reachable in play, sorted by (pursuer, evader, turn).
    ///
    /// Exploration starts from every allowed start with the Pursuer to move
    /// and stops at terminal states, which are included but have no
    /// successors. Errors if the state count exceeds the configured capacity.
    pub fn reachable_states(&self) -> Result<Vec<GameState>, EngineError> {
        self.explore(false)
    }

    /// Breadth-first closure of the starts. With `lenient`, out-of-range
    /// moves are skipped instead of followed so validation can report them.
    fn explore(&self, lenient: bool) -> Result<Vec<GameState>, EngineError> {
        let mut seen: BTreeSet<GameState> = BTreeSet::new();
        let mut queue: VecDeque<GameState> = VecDeque::new();
        for position in self.initial_pairs() {
            let state = GameState {
                position,
                turn: Turn::Pursuer,
            };
            if seen.insert(state) {
                queue.push_back(state);
            }
        }
        while let Some(state) = queue.pop_front() {
            if self.is_terminal(&state) {
                continue;
            }
            for next in self.successors(state) {
                if lenient && !self.in_range(&next) {
                    continue;
                }
                if seen.len() >= self.state_capacity && !seen.contains(&next) {
                    return Err(EngineError::CapacityExceeded {
                        limit: self.state_capacity,
                    });
                }
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    fn in_range(&self, state: &GameState) -> bool {
        state.position.pursuer.0 < self.pursuer_positions
            && state.position.evader.0 < self.evader_positions
    }
}

fn normalize(mut moves: Vec<PositionId>) -> Vec<PositionId> {
    moves.sort_unstable();
    moves.dedup();
    moves
}

/// Builder for [`GameSpec`]. Every field except the position counts has a
/// default: every-step finality, no position-independence claim, all-pairs
/// starts, nothing final, and no moves (which validation will flag).
pub struct GameSpecBuilder {
    pursuer_positions: u32,
    evader_positions: u32,
    timing: FinalCheckTiming,
    position_independent_hint: bool,
    state_capacity: usize,
    initial_pursuer: Option<Vec<PositionId>>,
    initial_evader: Option<PositionFn>,
    final_positions: Option<JointPredicate>,
    pursuer_move_fn: Option<MoveFn>,
    evader_move_fn: Option<MoveFn>,
}

impl GameSpecBuilder {
    fn new(pursuer_positions: u32, evader_positions: u32) -> GameSpecBuilder {
        GameSpecBuilder {
            pursuer_positions,
            evader_positions,
            timing: FinalCheckTiming::EveryStep,
            position_independent_hint: false,
            state_capacity: DEFAULT_STATE_CAPACITY,
            initial_pursuer: None,
            initial_evader: None,
            final_positions: None,
            pursuer_move_fn: None,
            evader_move_fn: None,
        }
    }

    pub fn timing(mut self, timing: FinalCheckTiming) -> Self {
        self.timing = timing;
        self
    }

    pub fn position_independent_hint(mut self, hint: bool) -> Self {
        self.position_independent_hint = hint;
        self
    }

    pub fn state_capacity(mut self, capacity: usize) -> Self {
        self.state_capacity = capacity;
        self
    }

    pub fn initial_pursuer(mut self, positions: Vec<u32>) -> Self {
        let mut ids: Vec<PositionId> = positions.into_iter().map(PositionId).collect();
        ids.sort_unstable();
        ids.dedup();
        self.initial_pursuer = Some(ids);
        self
    }

    pub fn initial_evader(
        mut self,
        f: impl Fn(PositionId) -> Vec<PositionId> + Send + Sync + 'static,
    ) -> Self {
        self.initial_evader = Some(Box::new(f));
        self
    }

    pub fn final_positions(
        mut self,
        f: impl Fn(JointPosition) -> bool + Send + Sync + 'static,
    ) -> Self {
        self.final_positions = Some(Box::new(f));
        self
    }

    pub fn pursuer_moves(
        mut self,
        f: impl Fn(JointPosition) -> Vec<PositionId> + Send + Sync + 'static,
    ) -> Self {
        self.pursuer_move_fn = Some(Box::new(f));
        self
    }

    pub fn evader_moves(
        mut self,
        f: impl Fn(JointPosition) -> Vec<PositionId> + Send + Sync + 'static,
    ) -> Self {
        self.evader_move_fn = Some(Box::new(f));
        self
    }

    pub fn build(self) -> GameSpec {
        let pursuer_positions = self.pursuer_positions;
        let evader_positions = self.evader_positions;
        GameSpec {
            pursuer_positions,
            evader_positions,
            timing: self.timing,
            position_independent_hint: self.position_independent_hint,
            state_capacity: self.state_capacity,
            initial_pursuer: self
                .initial_pursuer
                .unwrap_or_else(|| (0..pursuer_positions).map(PositionId).collect()),
            initial_evader: self.initial_evader.unwrap_or_else(|| {
                Box::new(move |_| (0..evader_positions).map(PositionId).collect())
            }),
            final_positions: self.final_positions.unwrap_or_else(|| Box::new(|_| false)),
            pursuer_move_fn: self.pursuer_move_fn.unwrap_or_else(|| Box::new(|_| Vec::new())),
            evader_move_fn: self.evader_move_fn.unwrap_or_else(|| Box::new(|_| Vec::new())),
        }
    }
}

/// A rule violation found by [`GameSpec::validate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecDiagnostic {
    /// A reachable non-terminal state offers its mover no moves; every such
    /// state must have at least one.
    EmptyMoveList { state: GameState },
    /// A move leads outside the declared position range.
    MoveOutOfRange { state: GameState, target: PositionId },
    /// There is no initial Pursuer position to choose from.
    NoInitialPursuer,
    /// An initial Pursuer position has no allowed Evader answer.
    EmptyInitialEvader { pursuer: PositionId },
    /// An allowed start lies outside the declared position range.
    InitialOutOfRange { position: PositionId },
}

impl fmt::Display for SpecDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecDiagnostic::EmptyMoveList { state } => {
                write!(f, "no allowed moves at non-terminal state {state}")
            }
            SpecDiagnostic::MoveOutOfRange { state, target } => {
                write!(f, "move to out-of-range position {target} at state {state}")
            }
            SpecDiagnostic::NoInitialPursuer => {
                write!(f, "no initial pursuer position is allowed")
            }
            SpecDiagnostic::EmptyInitialEvader { pursuer } => {
                write!(
                    f,
                    "no evader start is allowed against initial pursuer position {pursuer}"
                )
            }
            SpecDiagnostic::InitialOutOfRange { position } => {
                write!(f, "allowed start mentions out-of-range position {position}")
            }
        }
    }
}
