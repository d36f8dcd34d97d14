//! Error type shared by the engines.

use crate::game::GameState;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum EngineError {
    /// State-space exploration hit the configured capacity.
    #[error("state space exceeds the configured capacity of {limit} states")]
    CapacityExceeded { limit: usize },

    /// The game's move sets depend on the opponent's position, so the
    /// position-digraph machinery does not apply.
    #[error("game is position dependent: {detail}")]
    PositionDependent { detail: String },

    /// The Pursuer position digraph is not strongly connected, which the
    /// full-relation winner criterion requires.
    #[error("pursuer position digraph is not strongly connected")]
    NotStronglyConnected,

    /// The full-relation winner criterion requires the allowed starts to be a
    /// full rectangle: every Evader position available against every initial
    /// Pursuer position.
    #[error("allowed starts must pair every initial pursuer position with every evader position")]
    InitialNotRectangular,

    /// A strategy was consulted at a state where it makes no choice.
    #[error("strategy undefined at state {state}")]
    StrategyUndefined { state: GameState },

    /// The Evader strategy space is too large to enumerate.
    #[error("evader strategy count {count} exceeds the limit {limit}")]
    StrategyLimit { count: u128, limit: u64 },

    /// A game constructor was given parameters it cannot realize.
    #[error("invalid game parameters: {0}")]
    InvalidParameter(String),

    /// A requested start is not among the allowed starting positions.
    #[error("start ({pursuer}, {evader}) is not an allowed starting position")]
    StartNotAllowed { pursuer: u32, evader: u32 },
}
