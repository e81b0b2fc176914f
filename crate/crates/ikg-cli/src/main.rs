//! `ikg`: build, analyze, and query reconfiguration graphs over the
//! independent sets of a base graph, and sweep the claim catalog.

mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Map;

use ikg::analysis::{
    components, degree_profile, forest_status, girth, hamiltonicity, parity_bipartition,
    HamMethod, HamStatus, DEFAULT_NODE_BUDGET,
};
use ikg::graph::{make_family, parse_edge_list, FamilyKind, Graph, VertexSet};
use ikg::indsets::independence_polynomial;
use ikg::recon::{build_recon, recon_distance, ReconError, ReconGraph};
use ikg::verify::{detect_family, sweep_families};

use report::*;

#[derive(Parser)]
#[command(name = "ikg", about = "reconfiguration graphs of independent sets", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named family graph as an edge list (stdout unless --out)
    Family {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order of the family; for stars, the number of leaves
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated part sizes (multipartite only), e.g. 2,3
        #[arg(long)]
        parts: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the independence polynomial of a graph
    Poly {
        #[arg(long)]
        graph: PathBuf,
        /// Also evaluate the polynomial at this integer
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
    },
    /// Materialize the reconfiguration graph as DOT or JSON
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Exclude the empty set from the vertex set
        #[arg(long = "no-empty")]
        no_empty: bool,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a full structural report as JSON
    Analyze {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long = "no-empty")]
        no_empty: bool,
        /// Node-expansion budget for the Hamiltonicity search
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Shortest reconfiguration between two independent sets
    Distance {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long = "no-empty")]
        no_empty: bool,
        /// Comma-separated vertices, or the literal `empty`
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Sweep the claim catalog and print the summary table as JSON
    Verify {
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random multipartite part vectors and random graphs
        #[arg(long, default_value_t = 20)]
        random: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Path,
    Cycle,
    Star,
    Wheel,
    Complete,
    Empty,
    Multipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

/// Failure classes mapped onto process exit codes.
enum CliError {
    /// Exit 1: bad flags, malformed files, invalid queries.
    Input(String),
    /// Exit 2: an enumeration exceeded its configured cap.
    Resource(String),
    /// Exit 3: an internal invariant did not hold.
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Resource(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Resource(m) | CliError::Internal(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help and --version land here.
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Family { kind, n, parts, out } => family(kind, n, parts, out),
        Command::Poly { graph, eval } => poly(&load_graph(&graph)?, eval),
        Command::Build { graph, k, no_empty, format, out } => {
            build(&load_graph(&graph)?, k, !no_empty, format, &out)
        }
        Command::Analyze { graph, k, no_empty, budget } => {
            analyze(&load_graph(&graph)?, k, !no_empty, budget)
        }
        Command::Distance { graph, k, no_empty, from, to } => {
            distance(&load_graph(&graph)?, k, !no_empty, &from, &to)
        }
        Command::Verify { max_n, seed, random } => verify(max_n, seed, random),
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("--graph {}: {e}", path.display())))?;
    parse_edge_list(&text)
        .map_err(|e| CliError::Input(format!("--graph {}: {e}", path.display())))
}

fn family(
    kind: KindArg,
    n: Option<usize>,
    parts: Option<String>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let kind = match kind {
        KindArg::Multipartite => {
            let parts = parts.ok_or_else(|| {
                CliError::Input("--parts is required for --kind multipartite".into())
            })?;
            let sizes = parts
                .split(',')
                .map(|tok| tok.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Input(format!("--parts: cannot parse {parts:?}")))?;
            if let Some(n) = n {
                let total: usize = sizes.iter().sum();
                if n != total {
                    return Err(CliError::Input(format!(
                        "--n {n} disagrees with the part total {total}"
                    )));
                }
            }
            FamilyKind::CompleteMultipartite(sizes)
        }
        _ => {
            if parts.is_some() {
                return Err(CliError::Input(
                    "--parts is only valid with --kind multipartite".into(),
                ));
            }
            let n = n.ok_or_else(|| CliError::Input("--n is required for this kind".into()))?;
            match kind {
                KindArg::Path => FamilyKind::Path(n),
                KindArg::Cycle => FamilyKind::Cycle(n),
                KindArg::Star => FamilyKind::Star(n),
                KindArg::Wheel => FamilyKind::Wheel(n),
                KindArg::Complete => FamilyKind::Complete(n),
                KindArg::Empty => FamilyKind::EmptyGraph(n),
                KindArg::Multipartite => unreachable!(),
            }
        }
    };
    let g = make_family(&kind).map_err(|e| CliError::Input(format!("--kind: {e}")))?;

    let mut text = format!("# {kind}\n{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(text, "{u} {v}");
    }
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| CliError::Input(format!("--out {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn poly(g: &Graph, eval: Option<i64>) -> Result<(), CliError> {
    let p = independence_polynomial(g).map_err(|e| CliError::Resource(e.to_string()))?;
    let report = PolyReport {
        alpha: p.alpha(),
        coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        eval: eval.map(|x| PolyEval {
            x,
            value: p.eval_at(x).to_string(),
        }),
    };
    println!("{}", to_pretty(&report)?);
    Ok(())
}

fn build_graph(g: &Graph, k: usize, include_empty: bool) -> Result<ReconGraph, CliError> {
    build_recon(g, k, include_empty).map_err(|e| match e {
        ReconError::ResourceLimit(e) => CliError::Resource(e.to_string()),
        other => CliError::Input(other.to_string()),
    })
}

fn build(
    g: &Graph,
    k: usize,
    include_empty: bool,
    format: FormatArg,
    out: &PathBuf,
) -> Result<(), CliError> {
    let r = build_graph(g, k, include_empty)?;
    let text = match format {
        FormatArg::Dot => to_dot(&r),
        FormatArg::Json => {
            let report = BuildReport {
                base: BaseMeta { n: g.order(), m: g.size() },
                k,
                include_empty,
                order: r.order(),
                size: r.size(),
                nodes: (0..r.order()).map(|i| r.label(i).iter().collect()).collect(),
                edges: r.edges(),
            };
            let mut text = to_pretty(&report)?;
            text.push('\n');
            text
        }
    };
    fs::write(out, text).map_err(|e| CliError::Input(format!("--out {}: {e}", out.display())))
}

/// One node line per vertex (`s<index>`, labeled with the member list) and
/// one edge line per edge, smaller index first.
fn to_dot(r: &ReconGraph) -> String {
    let mut out = String::from("graph recon {\n");
    for i in 0..r.order() {
        let _ = writeln!(out, "  s{i} [label=\"{}\"];", r.label(i));
    }
    for (i, j) in r.edges() {
        let _ = writeln!(out, "  s{i} -- s{j};");
    }
    out.push_str("}\n");
    out
}

fn analyze(g: &Graph, k: usize, include_empty: bool, budget: u64) -> Result<(), CliError> {
    let r = build_graph(g, k, include_empty)?;
    if r.order() == 0 {
        return Err(CliError::Input(
            "the reconfiguration graph has no vertices (k = 0 without the empty set)".into(),
        ));
    }
    let p = independence_polynomial(g).map_err(|e| CliError::Resource(e.to_string()))?;
    let parity = parity_bipartition(&r);
    if !parity.is_valid {
        return Err(CliError::Internal(
            "an edge joins two labels of equal cardinality parity".into(),
        ));
    }
    let decomp = components(&r);
    let degrees = degree_profile(&r).expect("order checked above");
    let status = forest_status(&r);
    let verdict = hamiltonicity(&r, budget);

    let report = AnalysisReport {
        graph: GraphMeta {
            n: g.order(),
            m: g.size(),
            family: detect_family(g).map(|kind| kind.to_string()),
        },
        k,
        include_empty,
        recon: ReconMeta { order: r.order(), size: r.size() },
        alpha: p.alpha(),
        polynomial: p.coeffs().iter().map(|c| c.to_string()).collect(),
        eval_at_1: p.eval_at(1).to_string(),
        eval_at_minus_1: p.eval_at(-1).to_string(),
        components: ComponentsMeta { count: decomp.count, sizes: decomp.sizes },
        bipartition: BipartitionMeta { even: parity.even, odd: parity.odd },
        girth: girth(&r),
        degrees: DegreesMeta {
            min: degrees.min,
            max: degrees.max,
            regular: degrees.is_regular,
        },
        forest: ForestMeta {
            is_forest: status.is_forest,
            is_tree: status.is_tree,
        },
        hamiltonian: HamMeta {
            status: match verdict.status {
                HamStatus::Yes => "yes",
                HamStatus::No => "no",
                HamStatus::Unknown => "unknown",
            },
            method: match verdict.method {
                HamMethod::ParityObstruction => "parity_obstruction",
                HamMethod::TooFewVertices => "too_few_vertices",
                HamMethod::ExhaustiveSearch => "exhaustive_search",
                HamMethod::BudgetExhausted => "budget_exhausted",
            },
        },
    };
    println!("{}", to_pretty(&report)?);
    Ok(())
}

fn parse_set(flag: &str, spec: &str, n: usize) -> Result<VertexSet, CliError> {
    if spec == "empty" {
        return Ok(VertexSet::EMPTY);
    }
    let mut set = VertexSet::EMPTY;
    for tok in spec.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{flag}: cannot parse vertex {tok:?}")))?;
        if v >= n {
            return Err(CliError::Input(format!(
                "{flag}: vertex {v} out of range, order is {n}"
            )));
        }
        set = set.with(v);
    }
    Ok(set)
}

fn distance(g: &Graph, k: usize, include_empty: bool, from: &str, to: &str) -> Result<(), CliError> {
    let r = build_graph(g, k, include_empty)?;
    let s = parse_set("--from", from, g.order())?;
    let t = parse_set("--to", to, g.order())?;
    let check = |flag: &str, set: VertexSet| -> Result<(), CliError> {
        if r.index_of(set).is_none() {
            return Err(CliError::Input(format!(
                "{flag}: {set} is not a vertex (not independent, larger than k, or the excluded empty set)"
            )));
        }
        Ok(())
    };
    check("--from", s)?;
    check("--to", t)?;
    match recon_distance(&r, s, t).expect("both endpoints validated") {
        None => println!("unreachable"),
        Some(path) => {
            println!("{}", path.length());
            let labels: Vec<String> = path.vertices().iter().map(|v| v.to_string()).collect();
            println!("{}", labels.join(" -> "));
        }
    }
    Ok(())
}

fn verify(max_n: usize, seed: u64, random: usize) -> Result<(), CliError> {
    if !(1..=63).contains(&max_n) {
        return Err(CliError::Input(format!(
            "--max-n must be within 1..=63, got {max_n}"
        )));
    }
    let summary = sweep_families(max_n, seed, random);
    let mut claims = Map::new();
    for row in &summary.rows {
        let counts = ClaimCountsOut {
            pass: row.pass,
            vacuous: row.vacuous,
            fail: row.fail,
            error: row.error,
        };
        claims.insert(
            row.claim.to_string(),
            serde_json::to_value(counts).expect("plain counts serialize"),
        );
    }
    println!("{}", to_pretty(&serde_json::Value::Object(claims))?);
    Ok(())
}

fn to_pretty<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))
}
