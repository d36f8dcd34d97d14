//! Extended naturals used for labels, ranks and game lengths.

use std::fmt;

/// A natural number extended with infinity.
///
/// Labels, relation ranks and game lengths all live in this domain: a finite
/// value counts moves, while `Infinite` means the quantity is never attained
/// (the Evader survives forever). The derived ordering places every finite
/// value below `Infinite`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    pub const ZERO: GameValue = GameValue::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(v) => Some(v),
            GameValue::Infinite => None,
        }
    }

    /// `1 + self`, with infinity absorbing.
    pub fn plus_one(self) -> GameValue {
        match self {
            GameValue::Finite(v) => GameValue::Finite(v + 1),
            GameValue::Infinite => GameValue::Infinite,
        }
    }

    /// `ceil(self / 2)`, with infinity absorbing.
    ///
    /// In an alternating move sequence of length `k` whose first move belongs
    /// to the Pursuer, exactly `ceil(k / 2)` of the moves are the Pursuer's;
    /// this converts a state label into a count of Pursuer moves.
    pub fn ceil_half(self) -> GameValue {
        match self {
            GameValue::Finite(v) => GameValue::Finite(v.div_ceil(2)),
            GameValue::Infinite => GameValue::Infinite,
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(v) => write!(f, "{v}"),
            GameValue::Infinite => write!(f, "inf"),
        }
    }
}
