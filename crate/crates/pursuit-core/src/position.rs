//! Position-level structure: per-player movement digraphs, products,
//! independence checking and connectivity.
//!
//! A game is position-independent when each player's move set depends only on
//! that player's own position. Such games are exactly the ones whose movement
//! can be captured by one digraph per player, which is what the matrix-based
//! solver works on.

use crate::error::EngineError;
use crate::game::{GameSpec, GameState, JointPosition, PositionId, Turn};
use std::collections::VecDeque;
use std::fmt;

/// A digraph on one player's positions; arcs are the allowed moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionDigraph {
    out: Vec<Vec<u32>>,
}

impl PositionDigraph {
    /// An arcless digraph on `vertex_count` vertices.
    pub fn new(vertex_count: u32) -> PositionDigraph {
        PositionDigraph {
            out: vec![Vec::new(); vertex_count as usize],
        }
    }

    /// Build from out-neighbor lists; the lists are deduplicated and sorted.
    pub fn from_neighbors(out: Vec<Vec<u32>>) -> PositionDigraph {
        let mut digraph = PositionDigraph { out };
        for list in &mut digraph.out {
            list.sort_unstable();
            list.dedup();
        }
        digraph
    }

    pub fn vertex_count(&self) -> u32 {
        self.out.len() as u32
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn add_arc(&mut self, from: u32, to: u32) {
        let list = &mut self.out[from as usize];
        if let Err(slot) = list.binary_search(&to) {
            list.insert(slot, to);
        }
    }

    /// Put a loop on every vertex.
    pub fn add_loops(&mut self) {
        for v in 0..self.vertex_count() {
            self.add_arc(v, v);
        }
    }

    pub fn out_neighbors(&self, v: PositionId) -> &[u32] {
        &self.out[v.0 as usize]
    }

    pub fn has_arc(&self, from: u32, to: u32) -> bool {
        self.out[from as usize].binary_search(&to).is_ok()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.has_arc(v, v))
    }
}

/// Categorical product: vertex (a,b) is indexed `a * |H| + b`, and (a,b) has
/// an arc to (a',b') exactly when both coordinates do. With loops everywhere
/// this models players that move all their pieces, each along an arc or
/// staying put.
pub fn categorical_product(g: &PositionDigraph, h: &PositionDigraph) -> PositionDigraph {
    let m = h.vertex_count();
    let mut out = Vec::with_capacity((g.vertex_count() * m) as usize);
    for a in 0..g.vertex_count() {
        for b in 0..m {
            let mut arcs = Vec::new();
            for &a2 in g.out_neighbors(PositionId(a)) {
                for &b2 in h.out_neighbors(PositionId(b)) {
                    arcs.push(a2 * m + b2);
                }
            }
            arcs.sort_unstable();
            arcs.dedup();
            out.push(arcs);
        }
    }
    PositionDigraph { out }
}

/// Proof that a game is not position-independent: one player's move set at
/// the same own position changes with the other player's position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DependenceWitness {
    PursuerMoves {
        pursuer: PositionId,
        evader_a: PositionId,
        evader_b: PositionId,
        moves_a: Vec<PositionId>,
        moves_b: Vec<PositionId>,
    },
    EvaderMoves {
        evader: PositionId,
        pursuer_a: PositionId,
        pursuer_b: PositionId,
        moves_a: Vec<PositionId>,
        moves_b: Vec<PositionId>,
    },
}

impl fmt::Display for DependenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |moves: &[PositionId]| {
            moves
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            DependenceWitness::PursuerMoves {
                pursuer,
                evader_a,
                evader_b,
                moves_a,
                moves_b,
            } => write!(
                f,
                "pursuer moves at position {pursuer} depend on the evader: \
                 against {evader_a} they are [{}], against {evader_b} they are [{}]",
                list(moves_a),
                list(moves_b)
            ),
            DependenceWitness::EvaderMoves {
                evader,
                pursuer_a,
                pursuer_b,
                moves_a,
                moves_b,
            } => write!(
                f,
                "evader moves at position {evader} depend on the pursuer: \
                 against {pursuer_a} they are [{}], against {pursuer_b} they are [{}]",
                list(moves_a),
                list(moves_b)
            ),
        }
    }
}

/// Check position independence by comparing move lists across the other
/// player's positions. Pairs where the mover could never actually move —
/// states that would be terminal on arrival — are exempt, since their move
/// lists can never influence play. Returns the first discrepancy in scan
/// order, or `None` when the game is position-independent.
pub fn verify_position_independence(spec: &GameSpec) -> Option<DependenceWitness> {
    let n_p = spec.pursuer_position_count();
    let n_e = spec.evader_position_count();

    for p in 0..n_p {
        let mut baseline: Option<(PositionId, Vec<PositionId>)> = None;
        for q in 0..n_e {
            let position = JointPosition::new(p, q);
            if spec.is_terminal(&GameState::new(position, Turn::Pursuer)) {
                continue;
            }
            let moves = spec.pursuer_moves(position);
            match &baseline {
                None => baseline = Some((PositionId(q), moves)),
                Some((q0, reference)) => {
                    if *reference != moves {
                        return Some(DependenceWitness::PursuerMoves {
                            pursuer: PositionId(p),
                            evader_a: *q0,
                            evader_b: PositionId(q),
                            moves_a: reference.clone(),
                            moves_b: moves,
                        });
                    }
                }
            }
        }
    }

    for q in 0..n_e {
        let mut baseline: Option<(PositionId, Vec<PositionId>)> = None;
        for p in 0..n_p {
            let position = JointPosition::new(p, q);
            if spec.is_terminal(&GameState::new(position, Turn::Evader)) {
                continue;
            }
            let moves = spec.evader_moves(position);
            match &baseline {
                None => baseline = Some((PositionId(p), moves)),
                Some((p0, reference)) => {
                    if *reference != moves {
                        return Some(DependenceWitness::EvaderMoves {
                            evader: PositionId(q),
                            pursuer_a: *p0,
                            pursuer_b: PositionId(p),
                            moves_a: reference.clone(),
                            moves_b: moves,
                        });
                    }
                }
            }
        }
    }

    None
}

/// Extract the two movement digraphs from a position-independent game.
/// Errors with the discrepancy when the game is in fact position-dependent.
pub fn derive_position_digraphs(
    spec: &GameSpec,
) -> Result<(PositionDigraph, PositionDigraph), EngineError> {
    if spec.pursuer_position_count() == 0 || spec.evader_position_count() == 0 {
        return Err(EngineError::InvalidParameter(
            "cannot derive movement digraphs of a game without positions".to_string(),
        ));
    }
    if let Some(witness) = verify_position_independence(spec) {
        return Err(EngineError::PositionDependent {
            detail: witness.to_string(),
        });
    }

    // Read each player's moves against the first position of the other
    // player where the mover could actually move; fall back to position 0
    // for positions that never get to move.
    let n_p = spec.pursuer_position_count();
    let n_e = spec.evader_position_count();
    let mut g_p = Vec::with_capacity(n_p as usize);
    for p in 0..n_p {
        let q = (0..n_e)
            .find(|&q| {
                !spec.is_terminal(&GameState::new(JointPosition::new(p, q), Turn::Pursuer))
            })
            .unwrap_or(0);
        g_p.push(
            spec.pursuer_moves(JointPosition::new(p, q))
                .into_iter()
                .map(|m| m.0)
                .collect(),
        );
    }
    let mut g_e = Vec::with_capacity(n_e as usize);
    for q in 0..n_e {
        let p = (0..n_p)
            .find(|&p| {
                !spec.is_terminal(&GameState::new(JointPosition::new(p, q), Turn::Evader))
            })
            .unwrap_or(0);
        g_e.push(
            spec.evader_moves(JointPosition::new(p, q))
                .into_iter()
                .map(|m| m.0)
                .collect(),
        );
    }
    Ok((
        PositionDigraph::from_neighbors(g_p),
        PositionDigraph::from_neighbors(g_e),
    ))
}

/// Whether every vertex reaches every other: one breadth-first search along
/// the arcs and one against them, both from vertex 0, must reach everything.
pub fn is_strongly_connected(digraph: &PositionDigraph) -> bool {
    let n = digraph.vertex_count() as usize;
    if n <= 1 {
        return true;
    }
    let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n as u32 {
        for &w in digraph.out_neighbors(PositionId(v)) {
            reverse[w as usize].push(v);
        }
    }
    let forward = |v: usize| digraph.out_neighbors(PositionId(v as u32)).to_vec();
    let backward = |v: usize| reverse[v].clone();
    bfs_covers(n, forward) && bfs_covers(n, backward)
}

fn bfs_covers(n: usize, neighbors: impl Fn(usize) -> Vec<u32>) -> bool {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for w in neighbors(v) {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}
