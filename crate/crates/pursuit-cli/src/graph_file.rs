//! The line-oriented graph file format.
//!
//! ```text
//! # comment — anywhere, to end of line
//! graph <n> <directed|undirected> <reflexive|plain>
//! e <u> <v>
//! ```
//!
//! The header comes first and appears exactly once; each `e` line adds one
//! edge (undirected) or arc (directed) between 0-based vertex ids. Duplicate
//! edges and out-of-range ids are rejected with the offending line number.
//! `reflexive` puts a loop on every vertex without listing them.

use crate::error::CliError;
use pursuit_core::InputGraph;
use std::collections::HashSet;
use std::path::Path;

/// Parse a graph file from disk.
pub fn parse_graph_file(path: &Path) -> Result<InputGraph, CliError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(&display, &e))?;
    parse_graph_text(&text, &display)
}

/// Parse the graph format from a string; `origin` names the source in errors.
pub fn parse_graph_text(text: &str, origin: &str) -> Result<InputGraph, CliError> {
    let fail = |line: usize, message: String| CliError::GraphParse {
        path: origin.to_string(),
        line,
        message,
    };
    let mut graph: Option<InputGraph> = None;
    let mut seen: HashSet<(u32, u32)> = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "graph" => {
                if graph.is_some() {
                    return Err(fail(line, "second graph header".to_string()));
                }
                let [_, n, orientation, loops] = tokens[..] else {
                    return Err(fail(
                        line,
                        "expected `graph <n> <directed|undirected> <reflexive|plain>`"
                            .to_string(),
                    ));
                };
                let n: u32 = n
                    .parse()
                    .map_err(|_| fail(line, format!("bad vertex count `{n}`")))?;
                let directed = match orientation {
                    "directed" => true,
                    "undirected" => false,
                    other => {
                        return Err(fail(
                            line,
                            format!("expected `directed` or `undirected`, got `{other}`"),
                        ))
                    }
                };
                let reflexive = match loops {
                    "reflexive" => true,
                    "plain" => false,
                    other => {
                        return Err(fail(
                            line,
                            format!("expected `reflexive` or `plain`, got `{other}`"),
                        ))
                    }
                };
                graph = Some(InputGraph::new(n, directed, reflexive));
            }
            "e" => {
                let Some(g) = graph.as_mut() else {
                    return Err(fail(line, "edge before the graph header".to_string()));
                };
                let [_, u, v] = tokens[..] else {
                    return Err(fail(line, "expected `e <u> <v>`".to_string()));
                };
                let u: u32 = u
                    .parse()
                    .map_err(|_| fail(line, format!("bad vertex id `{u}`")))?;
                let v: u32 = v
                    .parse()
                    .map_err(|_| fail(line, format!("bad vertex id `{v}`")))?;
                let n = g.vertex_count();
                if u >= n || v >= n {
                    return Err(fail(
                        line,
                        format!("edge {u} {v} mentions a vertex outside 0..{n}"),
                    ));
                }
                let key = if g.is_directed() || u <= v {
                    (u, v)
                } else {
                    (v, u)
                };
                if !seen.insert(key) {
                    return Err(fail(line, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v)
                    .map_err(|e| fail(line, e.to_string()))?;
            }
            other => {
                return Err(fail(line, format!("unknown directive `{other}`")));
            }
        }
    }

    graph.ok_or_else(|| fail(text.lines().count().max(1), "missing graph header".to_string()))
}

/// Render a graph back into the file format, canonically: header first, then
/// edges sorted with the smaller endpoint leading (undirected) or in arc
/// order (directed). Parsing the result reproduces the graph exactly.
pub fn export_graph(graph: &InputGraph) -> String {
    let mut out = format!(
        "graph {} {} {}\n",
        graph.vertex_count(),
        if graph.is_directed() {
            "directed"
        } else {
            "undirected"
        },
        if graph.is_reflexive() {
            "reflexive"
        } else {
            "plain"
        },
    );
    for (u, v) in graph.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
