//! TOML manifest parsing: a manifest names a game family, its parameters, a
//! graph file, and optional solver/output settings, and builds the
//! corresponding [`GameSpec`].
//!
//! ```toml
//! [game]
//! family = "classic"      # classic|distance|traps|tandem|eternal|seepage
//! cops = 1
//! # timing = "every-step" | "after-evader-move" | "after-pursuer-move"
//!
//! [graph]
//! path = "../graphs/p3.txt"   # relative to the manifest file
//!
//! [solver]
//! engine = "auto"          # auto|labels|relations|matrix
//!
//! [outputs]
//! json = "result.json"     # optional; relative to the working directory
//! artifacts = ["strategy"] # extra sections for `solve`
//! ```

use crate::error::CliError;
use crate::graph_file::parse_graph_file;
use pursuit_core::{
    classic_cops, distance_cops, eternal_domination, seepage, tandem_cops, traps_cops,
    FinalCheckTiming, GameSpec, InputGraph,
};
use serde::Deserialize;
use std::path::{Path, PathBuf};

/// Which engine a manifest or flag asks for.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum EngineChoice {
    /// Matrix engine when the game qualifies, state-digraph engine otherwise.
    #[default]
    Auto,
    Labels,
    Relations,
    Matrix,
}

impl EngineChoice {
    pub fn name(self) -> &'static str {
        match self {
            EngineChoice::Auto => "auto",
            EngineChoice::Labels => "labels",
            EngineChoice::Relations => "relations",
            EngineChoice::Matrix => "matrix",
        }
    }
}

/// Extra artifacts `solve` may be asked to emit via `[outputs] artifacts`.
pub const KNOWN_ARTIFACTS: [&str; 6] =
    ["winner", "length", "strategy", "ordering", "trace", "dot"];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestFile {
    game: GameSection,
    graph: GraphSection,
    #[serde(default)]
    solver: SolverSection,
    #[serde(default)]
    outputs: OutputsSection,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameSection {
    family: String,
    cops: Option<u32>,
    reach: Option<u32>,
    traps: Option<Vec<u32>>,
    pairs: Option<u32>,
    guards: Option<u32>,
    one_guard_moves: Option<bool>,
    greens: Option<u32>,
    initial_protected: Option<Vec<u32>>,
    timing: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphSection {
    path: String,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct SolverSection {
    #[serde(default)]
    engine: EngineChoice,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct OutputsSection {
    json: Option<String>,
    artifacts: Option<Vec<String>>,
}

/// A manifest resolved into a ready-to-solve game.
pub struct LoadedGame {
    pub spec: GameSpec,
    pub graph: InputGraph,
    /// Family name as written in the manifest.
    pub family: String,
    /// Graph path as written in the manifest.
    pub graph_path: String,
    pub engine: EngineChoice,
    pub json_out: Option<PathBuf>,
    pub artifacts: Vec<String>,
}

/// Read, validate, and build a manifest from disk.
pub fn load_manifest(path: &Path) -> Result<LoadedGame, CliError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(&display, &e))?;
    let file: ManifestFile = toml::from_str(&text).map_err(|e| CliError::Manifest {
        path: display.clone(),
        message: e.to_string(),
    })?;

    let graph_file = match path.parent() {
        Some(dir) if dir != Path::new("") => dir.join(&file.graph.path),
        _ => PathBuf::from(&file.graph.path),
    };
    let graph = parse_graph_file(&graph_file)?;

    let spec = build_spec(&file.game, &graph, &display)?;

    if let Some(artifacts) = &file.outputs.artifacts {
        for name in artifacts {
            if !KNOWN_ARTIFACTS.contains(&name.as_str()) {
                return Err(CliError::Manifest {
                    path: display,
                    message: format!(
                        "unknown artifact `{name}` (expected one of {})",
                        KNOWN_ARTIFACTS.join(", ")
                    ),
                });
            }
        }
    }

    Ok(LoadedGame {
        spec,
        graph,
        family: file.game.family,
        graph_path: file.graph.path,
        engine: file.solver.engine,
        json_out: file.outputs.json.map(PathBuf::from),
        artifacts: file.outputs.artifacts.unwrap_or_default(),
    })
}

fn build_spec(
    game: &GameSection,
    graph: &InputGraph,
    origin: &str,
) -> Result<GameSpec, CliError> {
    let fail = |message: String| CliError::Manifest {
        path: origin.to_string(),
        message,
    };

    // Parameter presence, checked against what the family accepts.
    let present = [
        ("cops", game.cops.is_some()),
        ("reach", game.reach.is_some()),
        ("traps", game.traps.is_some()),
        ("pairs", game.pairs.is_some()),
        ("guards", game.guards.is_some()),
        ("one_guard_moves", game.one_guard_moves.is_some()),
        ("greens", game.greens.is_some()),
        ("initial_protected", game.initial_protected.is_some()),
    ];
    let (required, optional): (&[&str], &[&str]) = match game.family.as_str() {
        "classic" => (&["cops"], &[]),
        "distance" => (&["cops", "reach"], &[]),
        "traps" => (&["cops", "traps"], &[]),
        "tandem" => (&["pairs"], &[]),
        "eternal" => (&["guards"], &["one_guard_moves"]),
        "seepage" => (&["greens"], &["initial_protected"]),
        other => {
            return Err(fail(format!(
                "unknown game family `{other}` (expected classic, distance, traps, \
                 tandem, eternal, or seepage)"
            )))
        }
    };
    for (name, is_present) in present {
        let allowed = required.contains(&name) || optional.contains(&name);
        if is_present && !allowed {
            return Err(fail(format!(
                "parameter `{name}` does not apply to family `{}`",
                game.family
            )));
        }
        if !is_present && required.contains(&name) {
            return Err(fail(format!(
                "family `{}` requires parameter `{name}`",
                game.family
            )));
        }
    }

    let mut spec = match game.family.as_str() {
        "classic" => classic_cops(graph, game.cops.unwrap())?,
        "distance" => distance_cops(graph, game.cops.unwrap(), game.reach.unwrap())?,
        "traps" => traps_cops(graph, game.cops.unwrap(), game.traps.as_ref().unwrap())?,
        "tandem" => tandem_cops(graph, game.pairs.unwrap())?,
        "eternal" => eternal_domination(
            graph,
            game.guards.unwrap(),
            game.one_guard_moves.unwrap_or(false),
        )?,
        "seepage" => seepage(
            graph,
            game.greens.unwrap(),
            game.initial_protected.as_deref().unwrap_or(&[]),
        )?,
        _ => unreachable!("family validated above"),
    };

    if let Some(timing) = &game.timing {
        let timing = match timing.as_str() {
            "every-step" => FinalCheckTiming::EveryStep,
            "after-evader-move" => FinalCheckTiming::AfterEvaderMove,
            "after-pursuer-move" => FinalCheckTiming::AfterPursuerMove,
            other => {
                return Err(fail(format!(
                    "unknown timing `{other}` (expected every-step, after-evader-move, \
                     or after-pursuer-move)"
                )))
            }
        };
        spec.set_timing(timing);
    }

    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pursuit_core::Winner;

    fn write_manifest(dir: &Path, name: &str, text: &str) -> PathBuf {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        path
    }

    fn scratch_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!(
            "pursuit-manifest-{tag}-{}",
            std::process::id()
        ));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("p3.txt"),
            "graph 3 undirected reflexive\ne 0 1\ne 1 2\n",
        )
        .unwrap();
        dir
    }

    #[test]
    fn loads_a_classic_manifest() {
        let dir = scratch_dir("classic");
        let manifest = write_manifest(
            &dir,
            "game.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\n\n[graph]\npath = \"p3.txt\"\n",
        );
        let loaded = load_manifest(&manifest).unwrap();
        assert_eq!(loaded.family, "classic");
        assert_eq!(loaded.graph_path, "p3.txt");
        assert_eq!(loaded.engine, EngineChoice::Auto);
        assert_eq!(loaded.spec.pursuer_position_count(), 3);
        let solution = pursuit_core::solve(&loaded.spec).unwrap();
        assert_eq!(solution.winner, Winner::Pursuer);
    }

    #[test]
    fn rejects_foreign_parameters() {
        let dir = scratch_dir("foreign");
        let manifest = write_manifest(
            &dir,
            "game.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\nreach = 2\n\n[graph]\npath = \"p3.txt\"\n",
        );
        match load_manifest(&manifest) {
            Err(CliError::Manifest { message, .. }) => {
                assert!(message.contains("`reach`"));
            }
            other => panic!("expected a manifest error, got {:?}", other.err()),
        }
    }

    #[test]
    fn rejects_missing_required_parameters() {
        let dir = scratch_dir("missing");
        let manifest = write_manifest(
            &dir,
            "game.toml",
            "[game]\nfamily = \"distance\"\ncops = 1\n\n[graph]\npath = \"p3.txt\"\n",
        );
        match load_manifest(&manifest) {
            Err(CliError::Manifest { message, .. }) => {
                assert!(message.contains("`reach`"));
            }
            other => panic!("expected a manifest error, got {:?}", other.err()),
        }
    }

    #[test]
    fn rejects_unknown_family_and_keys() {
        let dir = scratch_dir("unknown");
        let manifest = write_manifest(
            &dir,
            "family.toml",
            "[game]\nfamily = \"chess\"\n\n[graph]\npath = \"p3.txt\"\n",
        );
        assert!(matches!(
            load_manifest(&manifest),
            Err(CliError::Manifest { .. })
        ));
        let manifest = write_manifest(
            &dir,
            "key.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\nrooks = 2\n\n[graph]\npath = \"p3.txt\"\n",
        );
        assert!(matches!(
            load_manifest(&manifest),
            Err(CliError::Manifest { .. })
        ));
    }

    #[test]
    fn timing_override_is_applied() {
        let dir = scratch_dir("timing");
        let manifest = write_manifest(
            &dir,
            "game.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\ntiming = \"after-evader-move\"\n\n\
             [graph]\npath = \"p3.txt\"\n",
        );
        let loaded = load_manifest(&manifest).unwrap();
        assert_eq!(loaded.spec.timing(), FinalCheckTiming::AfterEvaderMove);

        let manifest = write_manifest(
            &dir,
            "bad.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\ntiming = \"sometimes\"\n\n\
             [graph]\npath = \"p3.txt\"\n",
        );
        assert!(matches!(
            load_manifest(&manifest),
            Err(CliError::Manifest { .. })
        ));
    }

    #[test]
    fn validates_artifact_names() {
        let dir = scratch_dir("artifacts");
        let manifest = write_manifest(
            &dir,
            "good.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\n\n[graph]\npath = \"p3.txt\"\n\n\
             [outputs]\nartifacts = [\"strategy\", \"trace\"]\n",
        );
        let loaded = load_manifest(&manifest).unwrap();
        assert_eq!(loaded.artifacts, vec!["strategy", "trace"]);

        let manifest = write_manifest(
            &dir,
            "bad.toml",
            "[game]\nfamily = \"classic\"\ncops = 1\n\n[graph]\npath = \"p3.txt\"\n\n\
             [outputs]\nartifacts = [\"poetry\"]\n",
        );
        assert!(matches!(
            load_manifest(&manifest),
            Err(CliError::Manifest { .. })
        ));
    }
}
