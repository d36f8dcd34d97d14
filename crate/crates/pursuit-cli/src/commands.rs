//! The `pursuit` subcommands.
//!
//! Every command prints a deterministic `key: value` document to stdout;
//! commands taking `--json` additionally write the same result as a JSON file
//! (schema version 1, keys sorted). Exit codes: 0 solved, 1 any error,
//! 2 when `solve --expect` names the losing player.

use crate::error::CliError;
use crate::manifest::{load_manifest, EngineChoice, LoadedGame};
use pursuit_core::{
    compute_relations, default_trace_cutoff, derive_position_digraphs, extract_removable_ordering,
    extract_strategies, fill_relation_matrix, game_length, matrix_game_length, matrix_winner,
    oracle_solve, play_trace, pursuer_wins_relational, solve, verify_position_independence,
    verify_removable_ordering, EngineError, FinalCheckTiming, GameSpec, GameState, GameValue,
    InputGraph, JointPosition, PositionId, Solution, TraceOutcome, Turn, Winner,
};
use serde_json::{json, Map, Value};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

// ---------------------------------------------------------------------------
// Argument grammar

#[derive(clap::Parser)]
#[command(
    name = "pursuit",
    version,
    about = "Solve pursuit games on graphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: CommandLine,
}

#[derive(clap::Subcommand)]
enum CommandLine {
    /// Solve a game: winner, witness start, and length.
    Solve {
        manifest: PathBuf,
        /// Engine override for this run.
        #[arg(long, value_enum)]
        engine: Option<EngineChoice>,
        /// Exit with code 2 if the computed winner differs.
        #[arg(long, value_enum)]
        expect: Option<ExpectedWinner>,
        /// Also write the result as a JSON file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Report only the game length.
    Length {
        manifest: PathBuf,
        #[arg(long, value_enum)]
        engine: Option<EngineChoice>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Serialize the optimal strategies of both players.
    Strategy {
        manifest: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Extract the removable position ordering, if the Pursuer wins.
    Ordering {
        manifest: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Play the extracted strategies against each other from a start.
    Trace {
        manifest: PathBuf,
        /// Start position as `pursuer,evader`; defaults to the best start
        /// against the worst reply.
        #[arg(long)]
        start: Option<String>,
        /// Stop after this many states without capture.
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run every applicable engine plus the oracle and compare answers.
    OracleCheck {
        #[arg(required = true)]
        manifests: Vec<PathBuf>,
    },
    /// Emit a DOT rendering of the game.
    ExportDot {
        manifest: PathBuf,
        /// `state`: the full state digraph; `positions`: the two movement
        /// digraphs (position-independent games only).
        #[arg(long, value_enum, default_value_t = DotTarget::State)]
        what: DotTarget,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the engines over a sweep of generated graphs.
    Bench {
        /// Graph family to sweep.
        #[arg(long, value_enum, default_value_t = BenchGraph::Path)]
        graph: BenchGraph,
        #[arg(long, default_value_t = 1)]
        cops: u32,
        /// Smallest graph size.
        #[arg(long, default_value_t = 4)]
        from: u32,
        /// Largest graph size.
        #[arg(long, default_value_t = 8)]
        to: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ExpectedWinner {
    Pursuer,
    Evader,
}

impl ExpectedWinner {
    fn winner(self) -> Winner {
        match self {
            ExpectedWinner::Pursuer => Winner::Pursuer,
            ExpectedWinner::Evader => Winner::Evader,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum DotTarget {
    State,
    Positions,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BenchGraph {
    Path,
    Cycle,
    Complete,
}

/// Parse the process arguments, run the chosen command, and return the exit
/// code.
pub fn run() -> i32 {
    let cli = match <Cli as clap::Parser>::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        CommandLine::Solve {
            manifest,
            engine,
            expect,
            json,
        } => cmd_solve(&manifest, engine, expect, json),
        CommandLine::Length {
            manifest,
            engine,
            json,
        } => cmd_length(&manifest, engine, json),
        CommandLine::Strategy { manifest, json } => cmd_strategy(&manifest, json),
        CommandLine::Ordering { manifest, json } => cmd_ordering(&manifest, json),
        CommandLine::Trace {
            manifest,
            start,
            cutoff,
            json,
        } => cmd_trace(&manifest, start, cutoff, json),
        CommandLine::OracleCheck { manifests } => cmd_oracle_check(&manifests),
        CommandLine::ExportDot {
            manifest,
            what,
            out,
        } => cmd_export_dot(&manifest, what, out),
        CommandLine::Bench {
            graph,
            cops,
            from,
            to,
        } => cmd_bench(graph, cops, from, to),
    }
}

// ---------------------------------------------------------------------------
// Result documents

/// A result document: deterministic `key: value` text plus a mirrored JSON
/// object (keys sorted on output).
struct Doc {
    lines: Vec<String>,
    json: Map<String, Value>,
}

impl Doc {
    fn new(command: &str, manifest: &Path, loaded: &LoadedGame) -> Doc {
        let mut doc = Doc {
            lines: Vec::new(),
            json: Map::new(),
        };
        doc.json.insert("schema_version".to_string(), json!(1));
        doc.put("command", command.to_string(), json!(command));
        let manifest = manifest.display().to_string();
        doc.put("manifest", manifest.clone(), json!(manifest));
        doc.put("family", loaded.family.clone(), json!(loaded.family));
        doc.put("graph", loaded.graph_path.clone(), json!(loaded.graph_path));
        doc
    }

    /// A `key: value` line mirrored into the JSON object.
    fn put(&mut self, key: &str, text: String, value: Value) {
        self.lines.push(format!("{key}: {text}"));
        self.json.insert(key.to_string(), value);
    }

    /// A text-only line (JSON carries the data elsewhere, usually as an
    /// array).
    fn line(&mut self, text: String) {
        self.lines.push(text);
    }

    fn json_field(&mut self, key: &str, value: Value) {
        self.json.insert(key.to_string(), value);
    }

    fn text(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }

    /// Print the document and, if requested, write the JSON file.
    fn emit(self, json_path: Option<&Path>) -> Result<(), CliError> {
        print!("{}", self.text());
        if let Some(path) = json_path {
            let mut body = serde_json::to_string_pretty(&Value::Object(self.json))
                .expect("json serialization cannot fail");
            body.push('\n');
            std::fs::write(path, body)
                .map_err(|e| CliError::io(&path.display().to_string(), &e))?;
        }
        Ok(())
    }
}

fn start_text(start: Option<PositionId>) -> String {
    match start {
        Some(p) => p.to_string(),
        None => "none".to_string(),
    }
}

fn start_json(start: Option<PositionId>) -> Value {
    match start {
        Some(p) => json!(p.0),
        None => Value::Null,
    }
}

fn value_json(value: GameValue) -> Value {
    match value.finite() {
        Some(n) => json!(n),
        None => json!("inf"),
    }
}

// ---------------------------------------------------------------------------
// Engine selection

#[derive(Clone, Copy, PartialEq, Eq)]
enum ResolvedEngine {
    Labels,
    Relations,
    Matrix,
}

impl ResolvedEngine {
    fn name(self) -> &'static str {
        match self {
            ResolvedEngine::Labels => "labels",
            ResolvedEngine::Relations => "relations",
            ResolvedEngine::Matrix => "matrix",
        }
    }
}

/// `auto` picks the matrix engine exactly when it applies: finality checked
/// at every step and moves verified position-independent. Everything else
/// runs on the state digraph.
fn resolve_engine(choice: EngineChoice, spec: &GameSpec) -> ResolvedEngine {
    match choice {
        EngineChoice::Labels => ResolvedEngine::Labels,
        EngineChoice::Relations => ResolvedEngine::Relations,
        EngineChoice::Matrix => ResolvedEngine::Matrix,
        EngineChoice::Auto => {
            if spec.timing() == FinalCheckTiming::EveryStep
                && verify_position_independence(spec).is_none()
            {
                ResolvedEngine::Matrix
            } else {
                ResolvedEngine::Labels
            }
        }
    }
}

fn run_engine(
    spec: &GameSpec,
    engine: ResolvedEngine,
) -> Result<(Winner, Option<PositionId>, GameValue), EngineError> {
    match engine {
        ResolvedEngine::Labels => {
            let solution = solve(spec)?;
            Ok((solution.winner, solution.best_start, solution.value))
        }
        ResolvedEngine::Relations => {
            let relations = compute_relations(spec)?;
            let (winner, start) = pursuer_wins_relational(spec, &relations);
            Ok((winner, start, game_length(spec, &relations)))
        }
        ResolvedEngine::Matrix => {
            let matrix = fill_relation_matrix(spec)?;
            let (winner, start) = matrix_winner(spec, &matrix);
            Ok((winner, start, matrix_game_length(spec, &matrix)))
        }
    }
}

fn engine_doc_entry(doc: &mut Doc, choice: EngineChoice, resolved: ResolvedEngine) {
    let text = if choice == EngineChoice::Auto {
        format!("{} (auto)", resolved.name())
    } else {
        resolved.name().to_string()
    };
    doc.put("engine", text, json!(resolved.name()));
    doc.json_field("engine_choice", json!(choice.name()));
}

// ---------------------------------------------------------------------------
// solve / length

fn cmd_solve(
    manifest: &Path,
    engine: Option<EngineChoice>,
    expect: Option<ExpectedWinner>,
    json: Option<PathBuf>,
) -> Result<i32, CliError> {
    let loaded = load_manifest(manifest)?;
    let choice = engine.unwrap_or(loaded.engine);
    let resolved = resolve_engine(choice, &loaded.spec);
    let (winner, start, length) = run_engine(&loaded.spec, resolved)?;

    let mut doc = Doc::new("solve", manifest, &loaded);
    engine_doc_entry(&mut doc, choice, resolved);
    doc.put("winner", winner.to_string(), json!(winner.to_string()));
    doc.put("start", start_text(start), start_json(start));
    doc.put("length", length.to_string(), value_json(length));

    for artifact in &loaded.artifacts {
        match artifact.as_str() {
            "strategy" => strategy_section(&mut doc, &loaded.spec)?,
            "ordering" => ordering_section(&mut doc, &loaded.spec, true)?,
            "trace" => trace_section(&mut doc, &loaded.spec, None, None)?,
            "dot" => {
                let solution = solve(&loaded.spec)?;
                let dot = state_dot(&solution);
                doc.line("dot:".to_string());
                for line in dot.lines() {
                    doc.line(format!("  {line}"));
                }
                doc.json_field("dot", json!(dot));
            }
            // winner and length are always present.
            _ => {}
        }
    }

    let json_path = json.or(loaded.json_out);
    doc.emit(json_path.as_deref())?;

    if let Some(expected) = expect {
        if expected.winner() != winner {
            return Ok(2);
        }
    }
    Ok(0)
}

fn cmd_length(
    manifest: &Path,
    engine: Option<EngineChoice>,
    json: Option<PathBuf>,
) -> Result<i32, CliError> {
    let loaded = load_manifest(manifest)?;
    let choice = engine.unwrap_or(loaded.engine);
    let resolved = resolve_engine(choice, &loaded.spec);
    let (winner, _, length) = run_engine(&loaded.spec, resolved)?;

    let mut doc = Doc::new("length", manifest, &loaded);
    engine_doc_entry(&mut doc, choice, resolved);
    doc.put("winner", winner.to_string(), json!(winner.to_string()));
    doc.put("length", length.to_string(), value_json(length));
    let json_path = json.or(loaded.json_out);
    doc.emit(json_path.as_deref())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// strategy

fn strategy_section(doc: &mut Doc, spec: &GameSpec) -> Result<(), CliError> {
    let solution = solve(spec)?;
    let (pursuer, evader) = extract_strategies(&solution.digraph, &solution.labels);

    let mut pursuer_json = Map::new();
    doc.line(format!("pursuer_strategy: {} moves", pursuer.moves().len()));
    for (from, to) in pursuer.moves() {
        doc.line(format!("p: {from} -> {to}"));
        pursuer_json.insert(from.to_string(), json!(to.to_string()));
    }
    let mut evader_json = Map::new();
    doc.line(format!("evader_strategy: {} moves", evader.moves().len()));
    for (from, to) in evader.moves() {
        doc.line(format!("e: {from} -> {to}"));
        evader_json.insert(from.to_string(), json!(to.to_string()));
    }
    doc.json_field("pursuer_strategy", Value::Object(pursuer_json));
    doc.json_field("evader_strategy", Value::Object(evader_json));
    Ok(())
}

fn cmd_strategy(manifest: &Path, json: Option<PathBuf>) -> Result<i32, CliError> {
    let loaded = load_manifest(manifest)?;
    let solution = solve(&loaded.spec)?;

    let mut doc = Doc::new("strategy", manifest, &loaded);
    doc.put(
        "winner",
        solution.winner.to_string(),
        json!(solution.winner.to_string()),
    );
    doc.put(
        "length",
        solution.value.to_string(),
        value_json(solution.value),
    );
    strategy_section(&mut doc, &loaded.spec)?;
    let json_path = json.or(loaded.json_out);
    doc.emit(json_path.as_deref())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// ordering

/// Append the removable-ordering section. With `lenient`, an inapplicable
/// game degrades to an `ordering: unavailable` line instead of an error.
fn ordering_section(doc: &mut Doc, spec: &GameSpec, lenient: bool) -> Result<(), CliError> {
    let matrix = match fill_relation_matrix(spec) {
        Ok(matrix) => matrix,
        Err(err) if lenient => {
            doc.put(
                "ordering",
                format!("unavailable ({err})"),
                Value::Null,
            );
            return Ok(());
        }
        Err(err) => return Err(err.into()),
    };
    match extract_removable_ordering(spec, &matrix) {
        None => {
            doc.put("ordering", "none".to_string(), Value::Null);
        }
        Some(ordering) => {
            doc.put(
                "ordering",
                format!("{} pairs", ordering.pairs.len()),
                json!(ordering
                    .pairs
                    .iter()
                    .map(|pair| json!([pair.pursuer.0, pair.evader.0]))
                    .collect::<Vec<_>>()),
            );
            doc.put(
                "witness",
                ordering.witness.to_string(),
                json!(ordering.witness.0),
            );
            for pair in &ordering.pairs {
                doc.line(format!("pair: {pair}"));
            }
            let verified = verify_removable_ordering(spec, &ordering);
            doc.put("verified", verified.to_string(), json!(verified));
        }
    }
    Ok(())
}

fn cmd_ordering(manifest: &Path, json: Option<PathBuf>) -> Result<i32, CliError> {
    let loaded = load_manifest(manifest)?;
    let mut doc = Doc::new("ordering", manifest, &loaded);
    ordering_section(&mut doc, &loaded.spec, false)?;
    let json_path = json.or(loaded.json_out);
    doc.emit(json_path.as_deref())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// trace

/// The default trace start: the engine's best start against the worst
/// allowed reply (largest label, ties to the smaller position); for
/// Evader-won games, the first allowed pair.
fn default_start(spec: &GameSpec, solution: &Solution) -> Result<JointPosition, CliError> {
    let no_starts = || CliError::Usage("the game has no allowed starts".to_string());
    match solution.best_start {
        Some(p) => {
            let mut best: Option<(GameValue, PositionId)> = None;
            for q in spec.initial_evader(p) {
                let state = GameState::new(
                    JointPosition {
                        pursuer: p,
                        evader: q,
                    },
                    Turn::Pursuer,
                );
                let label = solution
                    .labels
                    .by_state(&solution.digraph, &state)
                    .unwrap_or(GameValue::Infinite);
                if best.map(|(b, _)| label > b).unwrap_or(true) {
                    best = Some((label, q));
                }
            }
            best.map(|(_, q)| JointPosition {
                pursuer: p,
                evader: q,
            })
            .ok_or_else(no_starts)
        }
        None => spec.initial_pairs().first().copied().ok_or_else(no_starts),
    }
}

fn parse_start(text: &str) -> Result<JointPosition, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |s: &str| -> Result<u32, CliError> {
        s.parse()
            .map_err(|_| CliError::Usage(format!("bad start `{text}`: expected `pursuer,evader`")))
    };
    match parts.as_slice() {
        [p, q] => Ok(JointPosition::new(parse(p)?, parse(q)?)),
        _ => Err(CliError::Usage(format!(
            "bad start `{text}`: expected `pursuer,evader`"
        ))),
    }
}

fn trace_section(
    doc: &mut Doc,
    spec: &GameSpec,
    start: Option<JointPosition>,
    cutoff: Option<u32>,
) -> Result<(), CliError> {
    let solution = solve(spec)?;
    let (pursuer, evader) = extract_strategies(&solution.digraph, &solution.labels);
    let start = match start {
        Some(s) => s,
        None => default_start(spec, &solution)?,
    };
    let cutoff = cutoff.unwrap_or_else(|| default_trace_cutoff(&solution.digraph));
    let trace = play_trace(spec, &pursuer, &evader, start, cutoff)?;

    doc.put("start", start.to_string(), json!([start.pursuer.0, start.evader.0]));
    doc.put("cutoff", cutoff.to_string(), json!(cutoff));
    match trace.outcome {
        TraceOutcome::PursuerWins { pursuer_moves } => {
            doc.put("outcome", "capture".to_string(), json!("capture"));
            doc.put(
                "pursuer_moves",
                pursuer_moves.to_string(),
                json!(pursuer_moves),
            );
        }
        TraceOutcome::CutoffReached => {
            doc.put("outcome", "cutoff".to_string(), json!("cutoff"));
        }
    }
    let mut states_json = Vec::new();
    for state in &trace.states {
        doc.line(format!("state: {state}"));
        states_json.push(json!(state.to_string()));
    }
    doc.json_field("trace", Value::Array(states_json));
    Ok(())
}

fn cmd_trace(
    manifest: &Path,
    start: Option<String>,
    cutoff: Option<u32>,
    json: Option<PathBuf>,
) -> Result<i32, CliError> {
    let loaded = load_manifest(manifest)?;
    let start = start.as_deref().map(parse_start).transpose()?;
    let mut doc = Doc::new("trace", manifest, &loaded);
    trace_section(&mut doc, &loaded.spec, start, cutoff)?;
    let json_path = json.or(loaded.json_out);
    doc.emit(json_path.as_deref())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// oracle-check

fn outcome_text(winner: Winner, start: Option<PositionId>, length: GameValue) -> String {
    format!("winner={winner} start={} length={length}", start_text(start))
}

fn cmd_oracle_check(manifests: &[PathBuf]) -> Result<i32, CliError> {
    let mut out = String::from("command: oracle-check\n");
    let mut all_ok = true;

    for path in manifests {
        let loaded = load_manifest(path)?;
        let spec = &loaded.spec;
        out.push('\n');
        let _ = writeln!(out, "manifest: {}", path.display());
        let _ = writeln!(out, "family: {}", loaded.family);
        let _ = writeln!(out, "graph: {}", loaded.graph_path);

        let mut results: Vec<(Winner, Option<PositionId>, GameValue)> = Vec::new();

        let solution = solve(spec)?;
        let labels = (solution.winner, solution.best_start, solution.value);
        let _ = writeln!(out, "labels: {}", outcome_text(labels.0, labels.1, labels.2));
        results.push(labels);

        if spec.timing() != FinalCheckTiming::EveryStep {
            out.push_str("relations: skipped (timing)\n");
        } else {
            let relations = compute_relations(spec)?;
            let (winner, start) = pursuer_wins_relational(spec, &relations);
            let length = game_length(spec, &relations);
            let _ = writeln!(out, "relations: {}", outcome_text(winner, start, length));
            results.push((winner, start, length));
        }

        if spec.timing() != FinalCheckTiming::EveryStep {
            out.push_str("matrix: skipped (timing)\n");
        } else {
            match fill_relation_matrix(spec) {
                Ok(matrix) => {
                    let (winner, start) = matrix_winner(spec, &matrix);
                    let length = matrix_game_length(spec, &matrix);
                    let _ = writeln!(out, "matrix: {}", outcome_text(winner, start, length));
                    results.push((winner, start, length));
                }
                Err(EngineError::PositionDependent { .. }) => {
                    out.push_str("matrix: skipped (position-dependent)\n");
                }
                Err(err) => return Err(err.into()),
            }
        }

        match oracle_solve(spec) {
            Ok(oracle) => {
                let triple = (oracle.winner, oracle.best_start, oracle.value);
                let _ = writeln!(out, "oracle: {}", outcome_text(triple.0, triple.1, triple.2));
                results.push(triple);
            }
            Err(EngineError::CapacityExceeded { .. }) => {
                out.push_str("oracle: skipped (capacity)\n");
            }
            Err(err) => return Err(err.into()),
        }

        let agree = results.iter().all(|r| *r == results[0]);
        all_ok &= agree;
        let _ = writeln!(out, "agreement: {}", if agree { "ok" } else { "MISMATCH" });
    }

    out.push('\n');
    let _ = writeln!(out, "checked: {}", manifests.len());
    let _ = writeln!(out, "status: {}", if all_ok { "ok" } else { "MISMATCH" });
    print!("{out}");
    Ok(if all_ok { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// export-dot

fn state_dot(solution: &Solution) -> String {
    let mut dot = String::from("digraph states {\n  rankdir=LR;\n");
    for (i, state) in solution.digraph.states().iter().enumerate() {
        let shape = match state.turn {
            Turn::Pursuer => "box",
            Turn::Evader => "ellipse",
        };
        let peripheries = if solution.digraph.is_terminal(i) {
            ", peripheries=2"
        } else {
            ""
        };
        let _ = writeln!(
            dot,
            "  s{i} [shape={shape}{peripheries}, label=\"{state}\\n{}\"];",
            solution.labels.label(i)
        );
    }
    for (i, _) in solution.digraph.states().iter().enumerate() {
        for &j in solution.digraph.successors(i) {
            let _ = writeln!(dot, "  s{i} -> s{j};");
        }
    }
    dot.push_str("}\n");
    dot
}

fn positions_dot(spec: &GameSpec) -> Result<String, CliError> {
    let (pursuer, evader) = derive_position_digraphs(spec)?;
    let mut dot = String::from("digraph positions {\n");
    for (tag, digraph) in [("pursuer", &pursuer), ("evader", &evader)] {
        let prefix = &tag[..1];
        let _ = writeln!(dot, "  subgraph cluster_{tag} {{");
        let _ = writeln!(dot, "    label=\"{tag}\";");
        for v in 0..digraph.vertex_count() {
            let _ = writeln!(dot, "    {prefix}{v} [label=\"{v}\"];");
        }
        for v in 0..digraph.vertex_count() {
            for &w in digraph.out_neighbors(PositionId(v)) {
                let _ = writeln!(dot, "    {prefix}{v} -> {prefix}{w};");
            }
        }
        dot.push_str("  }\n");
    }
    dot.push_str("}\n");
    Ok(dot)
}

fn cmd_export_dot(
    manifest: &Path,
    what: DotTarget,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let loaded = load_manifest(manifest)?;
    let dot = match what {
        DotTarget::State => state_dot(&solve(&loaded.spec)?),
        DotTarget::Positions => positions_dot(&loaded.spec)?,
    };
    match out {
        Some(path) => {
            std::fs::write(&path, dot)
                .map_err(|e| CliError::io(&path.display().to_string(), &e))?;
            println!("written: {}", path.display());
        }
        None => print!("{dot}"),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// bench

fn cmd_bench(graph: BenchGraph, cops: u32, from: u32, to: u32) -> Result<i32, CliError> {
    let floor = match graph {
        BenchGraph::Cycle => 3,
        _ => 1,
    };
    if from < floor || from > to {
        return Err(CliError::Usage(format!(
            "need {floor} <= from <= to, got from={from} to={to}"
        )));
    }
    let kind = match graph {
        BenchGraph::Path => "path",
        BenchGraph::Cycle => "cycle",
        BenchGraph::Complete => "complete",
    };
    println!("command: bench");
    println!("graph_kind: {kind}");
    println!("cops: {cops}");
    for n in from..=to {
        let input = match graph {
            BenchGraph::Path => InputGraph::path(n),
            BenchGraph::Cycle => InputGraph::cycle(n),
            BenchGraph::Complete => InputGraph::complete(n),
        };
        let spec = pursuit_core::classic_cops(&input, cops)?;
        for engine in [
            ResolvedEngine::Labels,
            ResolvedEngine::Relations,
            ResolvedEngine::Matrix,
        ] {
            let started = Instant::now();
            let (_, _, length) = run_engine(&spec, engine)?;
            let millis = started.elapsed().as_secs_f64() * 1e3;
            println!(
                "n={n} engine={} millis={millis:.3} length={length}",
                engine.name()
            );
        }
    }
    Ok(0)
}
