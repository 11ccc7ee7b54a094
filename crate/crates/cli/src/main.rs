use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lamanchiral::chiral::{mu_constant_with, mu_truncated_with, Limits, MuOptions, SignConvention};
use lamanchiral::exactalg::RatFun;
use lamanchiral::graphs::{green_function, kirchhoff_det, weighted_laplacian, DirectedGraph, EdgeWeights};
use lamanchiral::laman::{find_type1prime_sequence, is_laman, HennebergSequence, LamanViolation, SimpleGraph};

mod verify;

/// Why a command did not succeed.
pub enum Failure {
    /// A verification found differing terms.
    Mismatch(String),
    /// Unreadable or invalid input.
    Input(String),
}

impl From<lamanchiral::Error> for Failure {
    fn from(e: lamanchiral::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

pub type Outcome = Result<String, Failure>;

#[derive(Parser)]
#[command(name = "lamanchiral", version, about = "Laman graphs, Henneberg sequences and chiral-operation weights")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Convention {
    Displayed,
    Literal,
}

impl From<Convention> for SignConvention {
    fn from(c: Convention) -> SignConvention {
        match c {
            Convention::Displayed => SignConvention::Displayed,
            Convention::Literal => SignConvention::Literal,
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Tests the Laman count, and with --base searches for a Henneberg I' sequence.
    GraphCheck {
        graph: PathBuf,
        /// Base edge `o,v`, where `o` is the base vertex.
        #[arg(long, value_parser = parse_base)]
        base: Option<(String, String)>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lists spanning trees by edge id.
    GraphTrees {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Prints the reduced weighted Laplacian and its determinant.
    GraphLaplacian {
        graph: PathBuf,
        /// JSON map from edge id to a rational or "t"; symbolic by default.
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Prints the Green's function d⁻¹ indexed by edge and vertex.
    GraphGreen {
        graph: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs the weight recursion on a sequence and integrates over the box.
    Weight {
        sequence: PathBuf,
        /// Constant term only (the default).
        #[arg(long, conflicts_with = "order")]
        constant: bool,
        /// Truncated generating function up to this order in 𝔷.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "displayed")]
        convention: Convention,
        #[arg(long, default_value_t = Limits::default().max_order)]
        max_order: u32,
        #[arg(long, env = "LAMANCHIRAL_MAX_VERTICES", default_value_t = Limits::default().max_vertices)]
        max_vertices: usize,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: verify::Suite,
    },
}

fn parse_base(s: &str) -> Result<(String, String), String> {
    let (o, v) = s.split_once(',').ok_or("expected o,v")?;
    let (o, v) = (o.trim(), v.trim());
    if o.is_empty() || v.is_empty() {
        return Err("expected o,v".into());
    }
    Ok((o.to_string(), v.to_string()))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: lamanchiral::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<DirectedGraph, Failure> {
    with_path(path, DirectedGraph::from_json(&read(path)?))
}

fn load_weights(g: &DirectedGraph, path: Option<&PathBuf>) -> Result<EdgeWeights, Failure> {
    match path {
        None => Ok(EdgeWeights::symbolic(g)),
        Some(p) => with_path(p, EdgeWeights::from_json(g, &read(p)?)),
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn simple_graph(g: &DirectedGraph) -> Result<SimpleGraph, Failure> {
    let verts: Vec<&str> = g.vertices().iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = g.edges().iter().map(|e| (e.tail.as_str(), e.head.as_str())).collect();
    Ok(SimpleGraph::from_edges(&verts, &edges)?)
}

fn graph_check(path: &Path, base: Option<&(String, String)>, format: Format) -> Outcome {
    let g = load_graph(path)?;
    let n = g.vertices().len();
    let m = g.edges().len();
    let mut seen = BTreeSet::new();
    let mut repeated = None;
    for e in g.edges() {
        let key = if e.tail <= e.head { (&e.tail, &e.head) } else { (&e.head, &e.tail) };
        if !seen.insert(key) && repeated.is_none() {
            repeated = Some(key);
        }
    }
    let violation = if n >= 2 && m != 2 * n - 3 {
        Some(LamanViolation::EdgeCount { edges: m, vertices: n })
    } else if let Some((a, b)) = repeated {
        Some(LamanViolation::Subset { vertices: [a.clone(), b.clone()].into(), edges: 2 })
    } else {
        is_laman(&simple_graph(&g)?)?.violation
    };
    let sequence = match (&violation, base) {
        (None, Some((o, v))) => Some(find_type1prime_sequence(&simple_graph(&g)?, o, (o, v))),
        _ => None,
    };
    match format {
        Format::Text => {
            let mut out = match &violation {
                None => "LAMAN\n".to_string(),
                Some(v) => format!("NOT LAMAN: {v}\n"),
            };
            match sequence {
                Some(Ok(seq)) => writeln!(out, "TYPE I' {}", seq.to_json()).expect("string"),
                Some(Err(e)) => writeln!(out, "NOT TYPE I': {e}").expect("string"),
                None => {}
            }
            Ok(out)
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("laman".into(), json!(violation.is_none()));
            if let Some(v) = &violation {
                obj.insert("violation".into(), json!(v.to_string()));
            }
            match sequence {
                Some(Ok(seq)) => {
                    obj.insert("sequence".into(), serde_json::from_str(&seq.to_json()).expect("valid json"));
                }
                Some(Err(e)) => {
                    obj.insert("sequence".into(), Value::Null);
                    obj.insert("search".into(), json!(e.to_string()));
                }
                None => {}
            }
            Ok(to_json(&Value::Object(obj)))
        }
    }
}

fn graph_trees(path: &Path, format: Format) -> Outcome {
    let g = load_graph(path)?;
    let trees = g.spanning_trees()?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for t in &trees {
                let ids: Vec<&str> = t.iter().map(String::as_str).collect();
                writeln!(out, "{{{}}}", ids.join(",")).expect("string");
            }
            writeln!(out, "{} spanning trees", trees.len()).expect("string");
            Ok(out)
        }
        Format::Json => Ok(to_json(&json!({ "count": trees.len(), "trees": trees }))),
    }
}

fn matrix_json(rows: &[Vec<RatFun>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect())).collect())
}

fn graph_laplacian(path: &Path, weights: Option<&PathBuf>, format: Format) -> Outcome {
    let g = load_graph(path)?;
    let w = load_weights(&g, weights)?;
    let m = weighted_laplacian(&g, &w)?;
    let det = kirchhoff_det(&g, &w)?;
    let kept = &g.vertices()[..m.len()];
    match format {
        Format::Text => {
            let mut out = String::new();
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    writeln!(out, "M[{}][{}] = {x}", kept[i], kept[j]).expect("string");
                }
            }
            writeln!(out, "det = {det}").expect("string");
            Ok(out)
        }
        Format::Json => Ok(to_json(&json!({ "vertices": kept, "matrix": matrix_json(&m), "det": det.to_string() }))),
    }
}

fn graph_green(path: &Path, weights: Option<&PathBuf>, format: Format) -> Outcome {
    let g = load_graph(path)?;
    let w = load_weights(&g, weights)?;
    let d = green_function(&g, &w)?;
    let kept = &g.vertices()[..g.vertices().len() - 1];
    match format {
        Format::Text => {
            let mut out = String::new();
            for (e, row) in g.edges().iter().zip(&d) {
                for (v, x) in kept.iter().zip(row) {
                    writeln!(out, "d[{}][{v}] = {x}", e.id).expect("string");
                }
            }
            Ok(out)
        }
        Format::Json => {
            let edges: Vec<&str> = g.edges().iter().map(|e| e.id.as_str()).collect();
            Ok(to_json(&json!({ "edges": edges, "vertices": kept, "green": matrix_json(&d) })))
        }
    }
}

fn weight(
    path: &Path,
    order: Option<u32>,
    format: Format,
    convention: Convention,
    max_order: u32,
    max_vertices: usize,
) -> Outcome {
    let seq = with_path(path, HennebergSequence::from_json(&read(path)?))?;
    let opts = MuOptions { convention: convention.into(), limits: Limits { max_order, max_vertices } };
    let result = match order {
        None => mu_constant_with(&seq, &opts)?,
        Some(n) => mu_truncated_with(&seq, n, &opts)?,
    };
    Ok(match format {
        Format::Text => format!("{}\n", result.value),
        Format::Json => to_json(&json!(result.value.to_json_map())),
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.verb {
        Verb::GraphCheck { graph, base, format } => graph_check(&graph, base.as_ref(), format),
        Verb::GraphTrees { graph, format } => graph_trees(&graph, format),
        Verb::GraphLaplacian { graph, weights, format } => graph_laplacian(&graph, weights.as_ref(), format),
        Verb::GraphGreen { graph, weights, format } => graph_green(&graph, weights.as_ref(), format),
        Verb::Weight { sequence, constant: _, order, format, convention, max_order, max_vertices } => {
            weight(&sequence, order, format, convention, max_order, max_vertices)
        }
        Verb::Verify { suite } => verify::run(suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
