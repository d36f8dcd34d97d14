//! Ready-made game families on graphs.
//!
//! [`InputGraph`] is the shared graph container — directed or undirected,
//! optionally reflexive — and the constructors below turn a graph into a
//! [`GameSpec`] for one of the bundled pursuit variants.

use crate::error::EngineError;
use crate::game::{FinalCheckTiming, GameSpec, JointPosition, PositionId};
use crate::position::{categorical_product, PositionDigraph};
use std::collections::VecDeque;

/// A finite graph as read from input: directed or undirected arcs over dense
/// vertex ids, with an optional graph-wide reflexivity flag that puts a loop
/// on every vertex without listing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputGraph {
    directed: bool,
    reflexive: bool,
    out: Vec<Vec<u32>>,
}

impl InputGraph {
    pub fn new(vertex_count: u32, directed: bool, reflexive: bool) -> InputGraph {
        InputGraph {
            directed,
            reflexive,
            out: vec![Vec::new(); vertex_count as usize],
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.out.len() as u32
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive
    }

    /// Add an edge (undirected) or arc (directed). Duplicates are absorbed.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), EngineError> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(EngineError::InvalidParameter(format!(
                "edge {u}-{v} mentions a vertex outside 0..{n}"
            )));
        }
        insert_sorted(&mut self.out[u as usize], v);
        if !self.directed && u != v {
            insert_sorted(&mut self.out[v as usize], u);
        }
        Ok(())
    }

    /// Stored out-neighbors, without the implied reflexive loops.
    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.out[u as usize].binary_search(&v).is_ok()
    }

    /// The explicit edges, canonically ordered: each undirected edge once
    /// with the smaller endpoint first, each directed arc as stored. Implied
    /// reflexive loops are not listed.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut edges = Vec::new();
        for u in 0..self.vertex_count() {
            for &v in self.out_neighbors(u) {
                if self.directed || u <= v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// The movement digraph the graph describes: its arcs, both ways for
    /// undirected edges, plus a loop everywhere if the graph is reflexive.
    pub fn to_position_digraph(&self) -> PositionDigraph {
        let mut digraph = PositionDigraph::from_neighbors(self.out.clone());
        if self.reflexive {
            digraph.add_loops();
        }
        digraph
    }

    /// Breadth-first distances from a vertex along the arcs; `None` where
    /// unreachable.
    pub fn distances_from(&self, start: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count() as usize];
        dist[start as usize] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let base = dist[v as usize].unwrap();
            for &w in self.out_neighbors(v) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(base + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The reflexive path on `n` vertices, 0 through n-1 in a line.
    pub fn path(n: u32) -> InputGraph {
        let mut g = InputGraph::new(n, false, true);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    /// The reflexive cycle on `n >= 3` vertices.
    pub fn cycle(n: u32) -> InputGraph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = InputGraph::new(n, false, true);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    /// The reflexive complete graph on `n` vertices.
    pub fn complete(n: u32) -> InputGraph {
        let mut g = InputGraph::new(n, false, true);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The reflexive Petersen graph: outer 5-cycle 0-4, spokes to 5-9, inner
    /// pentagram 5-9.
    pub fn petersen() -> InputGraph {
        let mut g = InputGraph::new(10, false, true);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        g
    }
}

fn insert_sorted(list: &mut Vec<u32>, value: u32) {
    if let Err(slot) = list.binary_search(&value) {
        list.insert(slot, value);
    }
}

/// Number of k-tuples over n vertices, as a checked u32.
fn tuple_count(n: u32, k: u32) -> Result<u32, EngineError> {
    (n as u64)
        .checked_pow(k)
        .and_then(|c| u32::try_from(c).ok())
        .ok_or_else(|| {
            EngineError::InvalidParameter(format!(
                "{k} pursuers on {n} vertices make too many positions"
            ))
        })
}

/// Whether any of the k base-n digits of `index` equals `target`.
fn any_digit_matches(mut index: u32, n: u32, k: u32, target: u32) -> bool {
    for _ in 0..k {
        if index % n == target {
            return true;
        }
        index /= n;
    }
    false
}

/// The base-n digits of a tuple index, most significant first.
fn tuple_digits(mut index: u32, n: u32, k: u32) -> Vec<u32> {
    let mut digits = vec![0; k as usize];
    for slot in (0..k as usize).rev() {
        digits[slot] = index % n;
        index /= n;
    }
    digits
}

fn check_cops_game(graph: &InputGraph, cops: u32) -> Result<(), EngineError> {
    if graph.vertex_count() == 0 {
        return Err(EngineError::InvalidParameter(
            "the graph has no vertices".to_string(),
        ));
    }
    if cops == 0 {
        return Err(EngineError::InvalidParameter(
            "at least one pursuer is required".to_string(),
        ));
    }
    Ok(())
}

/// The classic pursuit game with `cops` pursuers on a graph.
///
/// Pursuer positions are cop tuples encoded in base n (first cop most
/// significant); every cop moves along an arc or, on a reflexive graph,
/// may stay. The single Evader does the same, capture is an Evader sharing a
/// vertex with any cop, and every placement is allowed.
pub fn classic_cops(graph: &InputGraph, cops: u32) -> Result<GameSpec, EngineError> {
    check_cops_game(graph, cops)?;
    let n = graph.vertex_count();
    let tuple_positions = tuple_count(n, cops)?;
    let movement = graph.to_position_digraph();
    let mut product = movement.clone();
    for _ in 1..cops {
        product = categorical_product(&product, &movement);
    }
    let evader_movement = movement;
    Ok(GameSpec::builder(tuple_positions, n)
        .final_positions(move |j| any_digit_matches(j.pursuer.0, n, cops, j.evader.0))
        .pursuer_moves(move |j| {
            product
                .out_neighbors(j.pursuer)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .evader_moves(move |j| {
            evader_movement
                .out_neighbors(j.evader)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .position_independent_hint(true)
        .build())
}

/// Like [`classic_cops`], but a cop within graph distance `reach` of the
/// Evader already captures. `reach` 0 is exactly the classic game.
pub fn distance_cops(graph: &InputGraph, cops: u32, reach: u32) -> Result<GameSpec, EngineError> {
    check_cops_game(graph, cops)?;
    let n = graph.vertex_count();
    let tuple_positions = tuple_count(n, cops)?;
    let movement = graph.to_position_digraph();
    let mut product = movement.clone();
    for _ in 1..cops {
        product = categorical_product(&product, &movement);
    }
    let evader_movement = movement;
    let close: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            graph
                .distances_from(v)
                .into_iter()
                .map(|d| d.map(|d| d <= reach).unwrap_or(false))
                .collect()
        })
        .collect();
    Ok(GameSpec::builder(tuple_positions, n)
        .final_positions(move |j| {
            tuple_digits(j.pursuer.0, n, cops)
                .into_iter()
                .any(|v| close[v as usize][j.evader.0 as usize])
        })
        .pursuer_moves(move |j| {
            product
                .out_neighbors(j.pursuer)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .evader_moves(move |j| {
            evader_movement
                .out_neighbors(j.evader)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .position_independent_hint(true)
        .build())
}

/// Like [`classic_cops`], but the listed trap vertices also capture: the
/// game is over as soon as the Evader stands on a cop or on a trap. The
/// Evader's movement is not restricted — walking into a trap is allowed,
/// and fatal.
pub fn traps_cops(graph: &InputGraph, cops: u32, traps: &[u32]) -> Result<GameSpec, EngineError> {
    check_cops_game(graph, cops)?;
    let n = graph.vertex_count();
    let mut trapped = vec![false; n as usize];
    for &t in traps {
        if t >= n {
            return Err(EngineError::InvalidParameter(format!(
                "trap vertex {t} is outside 0..{n}"
            )));
        }
        trapped[t as usize] = true;
    }
    let tuple_positions = tuple_count(n, cops)?;
    let movement = graph.to_position_digraph();
    let mut product = movement.clone();
    for _ in 1..cops {
        product = categorical_product(&product, &movement);
    }
    let evader_movement = movement;
    Ok(GameSpec::builder(tuple_positions, n)
        .final_positions(move |j| {
            trapped[j.evader.0 as usize] || any_digit_matches(j.pursuer.0, n, cops, j.evader.0)
        })
        .pursuer_moves(move |j| {
            product
                .out_neighbors(j.pursuer)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .evader_moves(move |j| {
            evader_movement
                .out_neighbors(j.evader)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .position_independent_hint(true)
        .build())
}

/// Equal or joined by an edge in either direction.
fn within_one(graph: &InputGraph, u: u32, v: u32) -> bool {
    u == v || graph.has_edge(u, v) || graph.has_edge(v, u)
}

/// Pursuit by cop tandems: `pairs` pairs of cops, each pair obliged to stay
/// within distance one of each other at all times. Pursuer positions are
/// exactly the valid tuples, densely renumbered in lexicographic order.
pub fn tandem_cops(graph: &InputGraph, pairs: u32) -> Result<GameSpec, EngineError> {
    check_cops_game(graph, pairs)?;
    let n = graph.vertex_count();
    let k = pairs as usize * 2;
    tuple_count(n, k as u32)?;

    // Enumerate the valid tuples in lexicographic order by backtracking;
    // partners are checked as soon as a pair is complete.
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    let mut current = vec![0u32; k];
    fn fill(
        graph: &InputGraph,
        n: u32,
        k: usize,
        slot: usize,
        current: &mut Vec<u32>,
        tuples: &mut Vec<Vec<u32>>,
    ) {
        if slot == k {
            tuples.push(current.clone());
            return;
        }
        for v in 0..n {
            if slot % 2 == 1 && !within_one(graph, current[slot - 1], v) {
                continue;
            }
            current[slot] = v;
            fill(graph, n, k, slot + 1, current, tuples);
        }
    }
    fill(graph, n, k, 0, &mut current, &mut tuples);
    if tuples.is_empty() {
        return Err(EngineError::InvalidParameter(
            "no valid tandem placement exists on this graph".to_string(),
        ));
    }

    let movement = graph.to_position_digraph();
    // Precompute each tuple's moves: every cop steps along an arc, and the
    // result must again be a valid tuple.
    let mut moves: Vec<Vec<u32>> = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let mut out: Vec<u32> = Vec::new();
        let options: Vec<&[u32]> = tuple
            .iter()
            .map(|&v| movement.out_neighbors(PositionId(v)))
            .collect();
        if options.iter().any(|o| o.is_empty()) {
            moves.push(out);
            continue;
        }
        let mut pick = vec![0usize; k];
        'combos: loop {
            let candidate: Vec<u32> = (0..k).map(|i| options[i][pick[i]]).collect();
            let valid = (0..k / 2).all(|i| within_one(graph, candidate[2 * i], candidate[2 * i + 1]));
            if valid {
                if let Some(index) = tandem_position_index(&tuples, &candidate) {
                    insert_sorted(&mut out, index);
                }
            }
            let mut slot = k;
            loop {
                if slot == 0 {
                    break 'combos;
                }
                slot -= 1;
                pick[slot] += 1;
                if pick[slot] < options[slot].len() {
                    break;
                }
                pick[slot] = 0;
            }
        }
        moves.push(out);
    }

    let occupied: Vec<Vec<u32>> = tuples.clone();
    let evader_movement = movement;
    Ok(GameSpec::builder(tuples.len() as u32, n)
        .final_positions(move |j| occupied[j.pursuer.0 as usize].contains(&j.evader.0))
        .pursuer_moves(move |j| {
            moves[j.pursuer.0 as usize]
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .evader_moves(move |j| {
            evader_movement
                .out_neighbors(j.evader)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .position_independent_hint(true)
        .build())
}

/// Dense index of a cop tuple among the valid tandem tuples, if it is one.
fn tandem_position_index(tuples: &[Vec<u32>], tuple: &[u32]) -> Option<u32> {
    tuples
        .binary_search_by(|probe| probe.as_slice().cmp(tuple))
        .ok()
        .map(|i| i as u32)
}

/// Binomial coefficient as a checked u32.
fn comb(n: u32, k: u32) -> Result<u32, EngineError> {
    if k > n {
        return Ok(0);
    }
    let mut value: u64 = 1;
    for i in 0..k as u64 {
        value = value
            .checked_mul(n as u64 - i)
            .ok_or_else(|| {
                EngineError::InvalidParameter(format!("too many {k}-subsets of {n} vertices"))
            })?
            / (i + 1);
        if value > u32::MAX as u64 {
            return Err(EngineError::InvalidParameter(format!(
                "too many {k}-subsets of {n} vertices"
            )));
        }
    }
    Ok(value as u32)
}

/// All k-subsets of 0..n in lexicographic order.
fn subsets_lex(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut all = Vec::new();
    if k > n {
        return all;
    }
    let mut current: Vec<u32> = (0..k).collect();
    loop {
        all.push(current.clone());
        // Advance to the next combination in lexicographic order.
        let k = k as usize;
        let mut i = k;
        loop {
            if i == 0 {
                return all;
            }
            i -= 1;
            if current[i] < n - (k - i) as u32 {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Whether a perfect matching exists between `left` and `right` under the
/// given compatibility test, by augmenting paths.
fn has_perfect_matching(
    left: &[u32],
    right: &[u32],
    compatible: impl Fn(u32, u32) -> bool,
) -> bool {
    let mut matched_right: Vec<Option<usize>> = vec![None; right.len()];
    fn augment(
        l: usize,
        left: &[u32],
        right: &[u32],
        compatible: &impl Fn(u32, u32) -> bool,
        seen: &mut [bool],
        matched_right: &mut [Option<usize>],
    ) -> bool {
        for r in 0..right.len() {
            if seen[r] || !compatible(left[l], right[r]) {
                continue;
            }
            seen[r] = true;
            if matched_right[r].is_none()
                || augment(
                    matched_right[r].unwrap(),
                    left,
                    right,
                    compatible,
                    seen,
                    matched_right,
                )
            {
                matched_right[r] = Some(l);
                return true;
            }
        }
        false
    }
    for l in 0..left.len() {
        let mut seen = vec![false; right.len()];
        if !augment(l, left, right, &compatible, &mut seen, &mut matched_right) {
            return false;
        }
    }
    true
}

/// Eternal protection of a graph by `guards` tokens against a roaming
/// attacker.
///
/// The Pursuer is the attacker and occupies any vertex; the Evader's
/// position is a guard set, a k-subset in lexicographic rank order. Each
/// round the attacker relocates freely, then the guards shift: normally
/// every guard may move to an adjacent vertex or stay (the new set must be
/// matchable to the old one along closed neighborhoods); with
/// `one_guard_moves`, at most one guard slides along a single edge. The
/// attacker wins the moment the guards finish a round without covering the
/// attacked vertex — finality is only checked after the guards move. Initial
/// placements must cover the first attack.
pub fn eternal_domination(
    graph: &InputGraph,
    guards: u32,
    one_guard_moves: bool,
) -> Result<GameSpec, EngineError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(EngineError::InvalidParameter(
            "the graph has no vertices".to_string(),
        ));
    }
    if guards == 0 || guards > n {
        return Err(EngineError::InvalidParameter(format!(
            "guard count must be between 1 and {n}"
        )));
    }
    let subset_count = comb(n, guards)?;
    let subsets = subsets_lex(n, guards);
    debug_assert_eq!(subsets.len(), subset_count as usize);

    // Guard moves between subsets, precomputed over all rank pairs.
    let transitions: Vec<Vec<PositionId>> = subsets
        .iter()
        .map(|x| {
            subsets
                .iter()
                .enumerate()
                .filter(|(_, y)| {
                    if one_guard_moves {
                        let gone: Vec<u32> =
                            x.iter().copied().filter(|v| !y.contains(v)).collect();
                        let came: Vec<u32> =
                            y.iter().copied().filter(|v| !x.contains(v)).collect();
                        match (gone.as_slice(), came.as_slice()) {
                            ([], []) => true,
                            ([u], [v]) => graph.has_edge(*u, *v) || graph.has_edge(*v, *u),
                            _ => false,
                        }
                    } else {
                        has_perfect_matching(x, y, |u, v| within_one(graph, u, v))
                    }
                })
                .map(|(rank, _)| PositionId(rank as u32))
                .collect()
        })
        .collect();

    let covering: Vec<Vec<PositionId>> = (0..n)
        .map(|x| {
            subsets
                .iter()
                .enumerate()
                .filter(|(_, set)| set.contains(&x))
                .map(|(rank, _)| PositionId(rank as u32))
                .collect()
        })
        .collect();

    let attack_targets: Vec<PositionId> = (0..n).map(PositionId).collect();
    let member = subsets.clone();
    Ok(GameSpec::builder(n, subset_count)
        .timing(FinalCheckTiming::AfterEvaderMove)
        .initial_evader(move |x| covering[x.0 as usize].clone())
        .final_positions(move |j| !member[j.evader.0 as usize].contains(&j.pursuer.0))
        .pursuer_moves(move |_| attack_targets.clone())
        .evader_moves(move |j| transitions[j.evader.0 as usize].clone())
        .position_independent_hint(true)
        .build())
}

/// Contamination control on a dag: sludge spreads from the single source
/// along unprotected arcs, and each round the protector may seal up to
/// `greens` vertices that are neither protected already nor under the
/// sludge. The protector wins once no unprotected path leads from the sludge
/// to any sink; the sludge wins by reaching a sink (play then never ends).
/// `initial_protected` seals vertices before play starts.
pub fn seepage(
    dag: &InputGraph,
    greens: u32,
    initial_protected: &[u32],
) -> Result<GameSpec, EngineError> {
    if !dag.is_directed() {
        return Err(EngineError::InvalidParameter(
            "seepage is played on a directed graph".to_string(),
        ));
    }
    let n = dag.vertex_count();
    if n == 0 || n > 20 {
        return Err(EngineError::InvalidParameter(
            "seepage supports 1 to 20 vertices".to_string(),
        ));
    }

    // Acyclicity and degree structure in one topological pass.
    let mut in_degree = vec![0u32; n as usize];
    for v in 0..n {
        for &w in dag.out_neighbors(v) {
            in_degree[w as usize] += 1;
        }
    }
    let mut queue: VecDeque<u32> = (0..n).filter(|&v| in_degree[v as usize] == 0).collect();
    let sources: Vec<u32> = queue.iter().copied().collect();
    let mut processed = 0;
    while let Some(v) = queue.pop_front() {
        processed += 1;
        for &w in dag.out_neighbors(v) {
            in_degree[w as usize] -= 1;
            if in_degree[w as usize] == 0 {
                queue.push_back(w);
            }
        }
    }
    if processed != n {
        return Err(EngineError::InvalidParameter(
            "the seepage graph contains a cycle".to_string(),
        ));
    }
    let [source] = sources.as_slice() else {
        return Err(EngineError::InvalidParameter(format!(
            "seepage needs exactly one source, found {}",
            sources.len()
        )));
    };
    let source = *source;
    let sinks: Vec<u32> = (0..n).filter(|&v| dag.out_neighbors(v).is_empty()).collect();

    let mut initial_mask = 0u32;
    for &v in initial_protected {
        if v >= n {
            return Err(EngineError::InvalidParameter(format!(
                "protected vertex {v} is outside 0..{n}"
            )));
        }
        if v == source {
            return Err(EngineError::InvalidParameter(
                "the source cannot be protected before play".to_string(),
            ));
        }
        initial_mask |= 1 << v;
    }

    let is_sink = {
        let mut flags = vec![false; n as usize];
        for &s in &sinks {
            flags[s as usize] = true;
        }
        flags
    };
    let arcs: Vec<Vec<u32>> = (0..n).map(|v| dag.out_neighbors(v).to_vec()).collect();

    // Final exactly when no unprotected path leads from the sludge to a sink.
    let reach_arcs = arcs.clone();
    let reach_sink = move |mask: u32, from: u32| -> bool {
        if mask & (1 << from) != 0 {
            return false;
        }
        let mut seen = 1u64 << from;
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if is_sink[v as usize] {
                return true;
            }
            for &w in &reach_arcs[v as usize] {
                if mask & (1 << w) == 0 && seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        false
    };

    let protect_arcs = arcs;
    Ok(GameSpec::builder(1 << n, n)
        .initial_pursuer(vec![initial_mask])
        .initial_evader(move |_| vec![PositionId(source)])
        .final_positions(move |j| !reach_sink(j.pursuer.0, j.evader.0))
        .pursuer_moves(move |j| {
            // Every way of sealing up to `greens` currently open vertices
            // other than the sludge vertex, including sealing none.
            let candidates: Vec<u32> = (0..n)
                .filter(|&v| v != j.evader.0 && j.pursuer.0 & (1 << v) == 0)
                .collect();
            let mut out = vec![j.pursuer];
            fn extend(
                base: u32,
                candidates: &[u32],
                from: usize,
                left: u32,
                out: &mut Vec<PositionId>,
            ) {
                if left == 0 {
                    return;
                }
                for i in from..candidates.len() {
                    let mask = base | (1 << candidates[i]);
                    out.push(PositionId(mask));
                    extend(mask, candidates, i + 1, left - 1, out);
                }
            }
            extend(j.pursuer.0, &candidates, 0, greens, &mut out);
            out
        })
        .evader_moves(move |j| {
            let mut out = vec![j.evader];
            for &w in &protect_arcs[j.evader.0 as usize] {
                if j.pursuer.0 & (1 << w) == 0 {
                    out.push(PositionId(w));
                }
            }
            out
        })
        .position_independent_hint(false)
        .build())
}

/// A bare position-independent game from two movement digraphs and a final
/// predicate, with every start allowed and finality checked at every step.
pub fn position_independent_spec(
    pursuer_digraph: PositionDigraph,
    evader_digraph: PositionDigraph,
    final_positions: impl Fn(JointPosition) -> bool + Send + Sync + 'static,
) -> GameSpec {
    GameSpec::builder(pursuer_digraph.vertex_count(), evader_digraph.vertex_count())
        .final_positions(final_positions)
        .pursuer_moves(move |j| {
            pursuer_digraph
                .out_neighbors(j.pursuer)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .evader_moves(move |j| {
            evader_digraph
                .out_neighbors(j.evader)
                .iter()
                .map(|&w| PositionId(w))
                .collect()
        })
        .position_independent_hint(true)
        .build()
}
