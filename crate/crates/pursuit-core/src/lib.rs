//! Solving engines for finite two-player pursuit games.
//!
//! A game is described by a [`GameSpec`]: finite Pursuer/Evader position sets,
//! per-state move functions, a set of final (Pursuer-winning) positions and a
//! set of allowed starts. Play alternates, Pursuer first, after an initial
//! placement round; the Pursuer wins exactly when the current position becomes
//! final, and the Evader wins by surviving forever.
//!
//! Three independent engines decide the winner and the optimal game length:
//!
//! * [`digraph`] — backward induction over the explicit state digraph,
//! * [`relation`] — an iterated domination relation over position pairs,
//! * [`matrix`] — a matrix refinement of the relation machinery for games
//!   whose move sets are position independent (see [`position`]).
//!
//! The [`oracle`] module re-derives results by depth-budgeted minimax with no
//! shared solving code, and [`library`] builds the concrete game families
//! (classic cops, distance capture, traps, tandem pairs, eternal domination,
//! seepage).

#![forbid(unsafe_code)]

pub mod digraph;
pub mod error;
pub mod game;
pub mod library;
pub mod matrix;
pub mod oracle;
pub mod position;
pub mod relation;
pub mod value;

pub use digraph::{
    build_state_digraph, compute_labels, default_trace_cutoff, extract_strategies, play_trace,
    solve, LabelTable, PlayTrace, Solution, StateDigraph, Strategy, TraceOutcome,
};
pub use error::EngineError;
pub use game::{
    FinalCheckTiming, GameSpec, GameSpecBuilder, GameState, JointPosition, PositionId,
    SpecDiagnostic, Turn, Winner, DEFAULT_STATE_CAPACITY,
};
pub use library::{
    classic_cops, distance_cops, eternal_domination, position_independent_spec, seepage,
    tandem_cops, traps_cops, InputGraph,
};
pub use matrix::{
    extract_removable_ordering, fill_relation_matrix, full_relation_winner, matrix_game_length,
    matrix_row_maximin, matrix_winner, verify_removable_ordering, RelationMatrix,
    RemovableOrdering,
};
pub use oracle::{
    count_evader_strategies, enumerate_evader_strategies, naive_labels, oracle_solve,
    oracle_solve_with_capacity, OracleOutcome, DEFAULT_ORACLE_CAPACITY,
};
pub use position::{
    categorical_product, derive_position_digraphs, is_strongly_connected,
    verify_position_independence, DependenceWitness, PositionDigraph,
};
pub use relation::{
    check_label_rank_consistency, compute_relations, game_length, pursuer_wins_relational,
    LabelRankViolation, RelationTable,
};
pub use value::GameValue;
