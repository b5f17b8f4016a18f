//! Command dispatch, independent of the process so tests can drive it.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ribbonkb_core::{medial_diagram, ComputeError, MultiPoly, Orientation, SizeLimit};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::format::{
    emit_diagram_file, emit_diagram_json, name_diagram, parse_any, FormatError, Input,
    NamedDiagram, NamedRibbonGraph,
};
use crate::par;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ribbonkb",
    version,
    about = "Ribbon graph and surface link polynomials"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Refuse instances with more edges or crossings than this
    #[arg(long, global = true, value_name = "N", default_value_t = SizeLimit::DEFAULT)]
    max_edges: usize,
    /// Worker threads for the exponential sums
    #[arg(long, global = true, value_name = "K", default_value_t = 1)]
    par: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bollobás–Riordan polynomial (signed if any edge is negative)
    Br { file: PathBuf },
    /// Kauffman bracket of a diagram, or of a graph's medial diagram
    Bracket { file: PathBuf },
    /// Medial diagram of a ribbon graph, in diagram file format
    Medial { file: PathBuf },
    /// Jones polynomial of a diagram, or of a graph's medial diagram
    Jones {
        file: PathBuf,
        /// One `+` (default direction) or `-` per component
        #[arg(long, value_name = "SIGNS")]
        orient: Option<String>,
    },
    /// Compare the medial bracket with the transformed polynomial
    Check { file: PathBuf },
    /// Vertex, edge, component, boundary and genus counts
    Metrics { file: PathBuf },
}

#[derive(Debug, Error)]
enum AppError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}: expected a ribbon graph file")]
    NotAGraph(String),
    #[error("bad --orient value `{0}`: use one `+` or `-` per component")]
    BadOrient(String),
    #[error(transparent)]
    Compute(#[from] ComputeError),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Compute(ComputeError::SizeLimit { .. }) => EXIT_TOO_LARGE,
            _ => EXIT_INPUT,
        }
    }
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_input(path: &PathBuf) -> Result<Input, AppError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| AppError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_any(&text).map_err(|source| AppError::Format {
        path: shown,
        source,
    })
}

fn read_graph(path: &PathBuf) -> Result<NamedRibbonGraph, AppError> {
    match read_input(path)? {
        Input::Ribbon(g) => Ok(g),
        Input::Diagram(_) => Err(AppError::NotAGraph(path.display().to_string())),
    }
}

fn medial_of(g: &NamedRibbonGraph) -> NamedDiagram {
    name_diagram(medial_diagram(&g.graph).diagram, g.edge_names.clone())
}

fn read_diagram(path: &PathBuf) -> Result<NamedDiagram, AppError> {
    Ok(match read_input(path)? {
        Input::Ribbon(g) => medial_of(&g),
        Input::Diagram(d) => d,
    })
}

fn poly_line(json: bool, name: &str, p: &MultiPoly) -> String {
    if json {
        json!({ name: p.to_string(), "variables": p.vars() }).to_string() + "\n"
    } else {
        format!("{p}\n")
    }
}

#[derive(Serialize)]
struct MetricsJson {
    v: usize,
    e: usize,
    k: usize,
    r: usize,
    n: usize,
    bc: usize,
    genus: usize,
}

fn dispatch(cli: &Cli) -> Result<(i32, String), AppError> {
    let c = &cli.common;
    let limit = SizeLimit::new(c.max_edges);
    let workers = c.par.max(1);
    match &cli.command {
        Command::Br { file } => {
            let g = read_graph(file)?;
            let signed = g.graph.has_negative_edges();
            let r = par::br_polynomial(&g.graph, signed, limit, workers)?;
            let out = if c.json {
                json!({ "polynomial": r.to_string(), "signed": signed }).to_string() + "\n"
            } else {
                format!("{r}\n")
            };
            Ok((EXIT_OK, out))
        }
        Command::Bracket { file } => {
            let d = read_diagram(file)?;
            let b = par::kauffman_bracket(&d.diagram, limit, workers)?;
            Ok((EXIT_OK, poly_line(c.json, "bracket", &b)))
        }
        Command::Medial { file } => {
            let d = medial_of(&read_graph(file)?);
            let out = if c.json {
                emit_diagram_json(&d) + "\n"
            } else {
                emit_diagram_file(&d)
            };
            Ok((EXIT_OK, out))
        }
        Command::Jones { file, orient } => {
            let d = read_diagram(file)?;
            let orientation = match orient {
                None => d.diagram.default_orientation(),
                Some(s) => parse_orient(s)?,
            };
            let w = d.diagram.writhe(&orientation).map_err(ComputeError::from)?;
            let j = par::jones_polynomial(&d.diagram, &orientation, limit, workers)?;
            let out = if c.json {
                json!({ "jones": j.to_string(), "writhe": w }).to_string() + "\n"
            } else {
                format!("{j}\n")
            };
            Ok((EXIT_OK, out))
        }
        Command::Check { file } => {
            let g = read_graph(file)?;
            let rep = par::check_identity(&g.graph, limit, workers)?;
            let code = if rep.equal { EXIT_OK } else { EXIT_MISMATCH };
            let out = if c.json {
                json!({ "equal": rep.equal, "lhs": rep.lhs.to_string(), "rhs": rep.rhs.to_string() })
                    .to_string()
                    + "\n"
            } else if rep.equal {
                format!("EQUAL: {}\n", rep.lhs)
            } else {
                format!("DIFFER:\n  bracket: {}\n  from BR: {}\n", rep.lhs, rep.rhs)
            };
            Ok((code, out))
        }
        Command::Metrics { file } => {
            let m = read_graph(file)?.graph.metrics();
            let out = if c.json {
                let j = MetricsJson {
                    v: m.v,
                    e: m.e,
                    k: m.k,
                    r: m.r,
                    n: m.n,
                    bc: m.bc,
                    genus: m.genus,
                };
                serde_json::to_string(&j).expect("serializable") + "\n"
            } else {
                format!("{m}\n")
            };
            Ok((EXIT_OK, out))
        }
    }
}

fn parse_orient(s: &str) -> Result<Orientation, AppError> {
    s.chars()
        .map(|ch| match ch {
            '+' => Ok(true),
            '-' | '−' => Ok(false),
            _ => Err(AppError::BadOrient(s.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Orientation)
}
