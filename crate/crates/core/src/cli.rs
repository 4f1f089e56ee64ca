//! Command-line front end. [`run`] parses arguments and returns the exit
//! code together with everything that would be printed, so the binary is a
//! thin wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 input
//! or usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::basis::{self, BasisError};
use crate::document::{
    AnyGraph, BasisReport, DocumentError, EdgeRef, GraphDocument, SelectionReport,
    SplineDocument, TrailReport,
};
use crate::graph::{LabeledGraph, DEFAULT_TRAIL_LIMIT};
use crate::ring::{GcdDomain, Integer};
use crate::spline::{self, SplineError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gspline",
    version,
    about = "Generalized splines on edge-labeled graphs: invariants, constructions and basis checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Graph document (JSON).
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Abort trail enumeration after this many trails.
    #[arg(long, default_value_t = DEFAULT_TRAIL_LIMIT)]
    max_trails: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a vertex labeling against every edge condition.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        spline: PathBuf,
    },
    /// Print the per-vertex lcm invariants and their product Q_G.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// List the zero trails of a vertex, or all trails between two vertices.
    Trails {
        #[command(flatten)]
        graph: GraphArgs,
        /// 1-based vertex position.
        #[arg(long)]
        vertex: usize,
        /// Enumerate every trail to this 1-based vertex instead of zero trails.
        #[arg(long)]
        to: Option<usize>,
    },
    /// Enumerate the minimal selections of an interior vertex.
    Selections {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        vertex: usize,
        /// List the selections of the completed graph (the ids `construct` uses).
        #[arg(long)]
        complete: bool,
    },
    /// Emit the constructed spline for a vertex and minimal selection.
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        vertex: usize,
        /// 1-based id from `selections --complete`; required for interior vertices.
        #[arg(long)]
        selection: Option<usize>,
    },
    /// Apply the determinantal basis criterion to n candidate splines.
    CheckBasis {
        #[command(flatten)]
        graph: GraphArgs,
        /// Spline document; repeat once per vertex
        #[arg(long = "spline", required = true)]
        splines: Vec<PathBuf>,
    },
    /// Compute the integer flow-up basis from the spline lattice.
    Flowup {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also write one spline document per basis element into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}: {source}")]
    Document {
        path: PathBuf,
        source: DocumentError,
    },
    #[error(transparent)]
    Spline(#[from] SplineError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }

    fn with_note(mut self, note: &str) -> Self {
        self.stderr.push_str(note);
        self.stderr.push('\n');
        self
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn load_graph(args: &GraphArgs) -> Result<AnyGraph, CliError> {
    let text = read(&args.graph)?;
    let doc = GraphDocument::from_json(&text).map_err(|source| CliError::Document {
        path: args.graph.clone(),
        source,
    })?;
    doc.to_any_graph()
        .map(|g| g.with_trail_limit(args.max_trails))
        .map_err(|source| CliError::Document {
            path: args.graph.clone(),
            source,
        })
}

fn load_values<R: GcdDomain>(path: &Path) -> Result<Vec<R>, CliError> {
    let document = |source| CliError::Document {
        path: path.to_path_buf(),
        source,
    };
    SplineDocument::from_json(&read(path)?)
        .and_then(|d| d.parse_values())
        .map_err(document)
}

/// Converts a 1-based position to an index.
fn position(one_based: usize, n: usize) -> Result<usize, CliError> {
    if (1..=n).contains(&one_based) {
        Ok(one_based - 1)
    } else {
        Err(CliError::Usage(format!(
            "vertex {one_based} out of range 1..={n}"
        )))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

macro_rules! on_graph {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            AnyGraph::Int($g) => $body,
            AnyGraph::Poly($g) => $body,
        }
    };
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Verify { graph, spline } => {
            let format = graph.format;
            on_graph!(load_graph(&graph)?, g => {
                let values = load_values(&spline)?;
                verify(&g, &values, format)
            })
        }
        Command::Invariants { graph } => {
            let format = graph.format;
            on_graph!(load_graph(&graph)?, g => invariants(&g, format))
        }
        Command::Trails { graph, vertex, to } => {
            let format = graph.format;
            on_graph!(load_graph(&graph)?, g => trails(&g, vertex, to, format))
        }
        Command::Selections {
            graph,
            vertex,
            complete,
        } => {
            let format = graph.format;
            on_graph!(load_graph(&graph)?, g => {
                let target = if complete { g.completion() } else { g };
                selections(&target, vertex, complete, format)
            })
        }
        Command::Construct {
            graph,
            vertex,
            selection,
        } => {
            let format = graph.format;
            on_graph!(load_graph(&graph)?, g => construct(&g, vertex, selection, format))
        }
        Command::CheckBasis { graph, splines } => {
            let format = graph.format;
            on_graph!(load_graph(&graph)?, g => {
                let candidates = splines
                    .iter()
                    .map(|p| load_values(p))
                    .collect::<Result<Vec<_>, _>>()?;
                check_basis(&g, &candidates, format)
            })
        }
        Command::Flowup { graph, out_dir } => {
            let format = graph.format;
            match load_graph(&graph)? {
                AnyGraph::Int(g) => flowup(&g, out_dir.as_deref(), format),
                AnyGraph::Poly(_) => Err(CliError::Usage(
                    "flow-up bases are computed over the integers only; \
                     use check-basis with your own candidates for intpoly graphs"
                        .into(),
                )),
            }
        }
    }
}

fn verify<R: GcdDomain>(
    g: &LabeledGraph<R>,
    values: &[R],
    format: Format,
) -> Result<Outcome, CliError> {
    let first = spline::first_violation(g, values)?;
    let rows: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let diff = values[e.u].sub(&values[e.v]);
            let ok = e.label.divides(&diff);
            (k, diff, ok)
        })
        .collect();
    let stdout = match format {
        Format::Json => to_json(&json!({
            "is_spline": first.is_none(),
            "first_violation": first.map(|k| EdgeRef::new(g, k)),
            "edges": rows.iter().map(|(k, diff, ok)| json!({
                "edge": g.edge_name(*k),
                "label": g.label(*k).to_string(),
                "difference": diff.to_string(),
                "ok": ok,
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for (k, diff, ok) in &rows {
                let mark = if *ok { "OK  " } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{mark} {}  label {}  difference {}",
                    g.edge_name(*k),
                    g.label(*k),
                    diff
                );
            }
            match first {
                None => s.push_str("spline\n"),
                Some(k) => {
                    let _ = writeln!(s, "not a spline: first violated edge {}", g.edge_name(k));
                }
            }
            s
        }
    };
    let code = if first.is_none() { EXIT_OK } else { EXIT_NEGATIVE };
    Ok(Outcome::ok(stdout).with_code(code))
}

fn invariants<R: GcdDomain>(g: &LabeledGraph<R>, format: Format) -> Result<Outcome, CliError> {
    let lcms = spline::vertex_lcms(g)?;
    let q = spline::q_g(g)?;
    let stdout = match format {
        Format::Json => to_json(&json!({
            "domain": R::DOMAIN,
            "vertex_lcms": lcms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "q_g": q.to_string(),
        })),
        Format::Text => {
            let mut s = String::new();
            for (i, l) in lcms.iter().enumerate() {
                let _ = writeln!(s, "L{} = {}", i + 1, l);
            }
            let _ = writeln!(s, "Q_G = {q}");
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn trails<R: GcdDomain>(
    g: &LabeledGraph<R>,
    vertex: usize,
    to: Option<usize>,
    format: Format,
) -> Result<Outcome, CliError> {
    let n = g.vertex_count();
    let from = position(vertex, n)?;
    let found = match to {
        Some(t) => {
            let to = position(t, n)?;
            if to == from {
                return Err(CliError::Usage("--to must differ from --vertex".into()));
            }
            g.enumerate_trails(from, to).map_err(SplineError::from)?
        }
        None if from == 0 => {
            return Err(CliError::Usage(
                "the first vertex has no zero trails; pass --to to list trails".into(),
            ))
        }
        None => g.zero_trails(from).map_err(SplineError::from)?,
    };
    let reports: Vec<TrailReport> = found.iter().map(|t| TrailReport::new(g, t)).collect();
    let stdout = match format {
        Format::Json => to_json(&json!({
            "from": g.name(from),
            "to": to.map(|t| g.name(t - 1).to_string()),
            "trails": reports,
        })),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(
                    s,
                    "{}  <{}>  gcd {}",
                    r.vertices.join("-"),
                    r.labels.join(", "),
                    r.gcd
                );
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn selections<R: GcdDomain>(
    g: &LabeledGraph<R>,
    vertex: usize,
    complete: bool,
    format: Format,
) -> Result<Outcome, CliError> {
    let i = position(vertex, g.vertex_count())?;
    let sels = spline::minimal_selections(g, i)?;
    let reports: Vec<SelectionReport> = sels
        .iter()
        .enumerate()
        .map(|(k, s)| SelectionReport::new(g, k + 1, s))
        .collect();
    let lcm = spline::zero_trail_lcm(g, i)?;
    let stdout = match format {
        Format::Json => to_json(&json!({
            "vertex": vertex,
            "vertex_lcm": lcm.to_string(),
            "complete": complete,
            "selections": reports,
        })),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let labels: Vec<String> = r
                    .label_set
                    .iter()
                    .map(|e| format!("{}={}", e.edge, e.label))
                    .collect();
                let _ = writeln!(
                    s,
                    "#{}  {{{}}}  product {}  value {}",
                    r.id,
                    labels.join(", "),
                    r.product,
                    r.value
                );
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn construct<R: GcdDomain>(
    g: &LabeledGraph<R>,
    vertex: usize,
    selection: Option<usize>,
    format: Format,
) -> Result<Outcome, CliError> {
    let n = g.vertex_count();
    let i = position(vertex, n)?;
    let spline = spline::construct_for_vertex(g, i, selection)?;
    let note = (i > 0 && i + 1 < n && !g.is_complete())
        .then_some("note: graph is not complete; constructed on its completion");
    let stdout = match format {
        Format::Json => to_json(&SplineDocument::from_values(spline.values())),
        Format::Text => {
            let vals: Vec<String> = spline.values().iter().map(ToString::to_string).collect();
            format!("({})\n", vals.join(", "))
        }
    };
    let outcome = Outcome::ok(stdout);
    Ok(match note {
        Some(n) => outcome.with_note(n),
        None => outcome,
    })
}

fn check_basis<R: GcdDomain>(
    g: &LabeledGraph<R>,
    candidates: &[Vec<R>],
    format: Format,
) -> Result<Outcome, CliError> {
    let verdict = basis::check_basis(g, candidates)?;
    let report = BasisReport::from(&verdict);
    let stdout = match format {
        Format::Json => to_json(&report),
        Format::Text => format!(
            "determinant {}\nQ_G {}\nquotient {}\n{}\n",
            report.determinant,
            report.q_g,
            report.quotient.as_deref().unwrap_or("none"),
            if report.is_basis { "basis" } else { "not a basis" }
        ),
    };
    let code = if verdict.is_basis {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok(Outcome::ok(stdout).with_code(code))
}

fn flowup(
    g: &LabeledGraph<Integer>,
    out_dir: Option<&Path>,
    format: Format,
) -> Result<Outcome, CliError> {
    let basis = basis::flowup_basis(g)?;
    let diagonal: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(i, s)| s.values()[i].to_string())
        .collect();
    let docs: Vec<SplineDocument> = basis
        .iter()
        .map(|s| SplineDocument::from_values(s.values()))
        .collect();
    if let Some(dir) = out_dir {
        let io = |e: std::io::Error| CliError::Io {
            path: dir.to_path_buf(),
            message: e.to_string(),
        };
        fs::create_dir_all(dir).map_err(io)?;
        for (k, doc) in docs.iter().enumerate() {
            let mut text = doc.to_json();
            text.push('\n');
            fs::write(dir.join(format!("spline_{}.json", k + 1)), text).map_err(io)?;
        }
    }
    let stdout = match format {
        Format::Json => to_json(&json!({ "diagonal": diagonal, "splines": docs })),
        Format::Text => {
            let mut s = format!("diagonal ({})\n", diagonal.join(", "));
            for (k, doc) in docs.iter().enumerate() {
                let _ = writeln!(s, "F{} = ({})", k + 1, doc.values.join(", "));
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}
