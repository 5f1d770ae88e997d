//! Batch command-line front end: apply generators to vertices, run the
//! acceptor-versus-oracle verifications, export graphs and automata, and
//! measure growth.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use clap::{Parser, Subcommand, ValueEnum};
use schreier_automatic::automatic::{
    edge_relation_dfa, structure_stats, verify_all, verify_edges, verify_pairs, verify_vertices,
    vertex_dfa,
};
use schreier_automatic::conv::pairs_language;
use schreier_automatic::growth::{
    action_series, diagnostics, integer_series, line_control_series, to_csv, tree_control_series,
};
use schreier_automatic::intline::{cross_check, find_correspondence, IntegerGraph};
use schreier_automatic::{
    ActionModel, EncodedVertex, Error, GeneratorLetter, GroupWord, MealyMachine, OmegaSpec,
    VerificationReport,
};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sgraph",
    about = "Schreier-graph automatic structure toolkit",
    version
)]
struct Cli {
    /// Boundary word, e.g. `01` (purely periodic) or `1:0` (prefix:period).
    #[arg(long, global = true, default_value = "01")]
    omega: String,

    /// Worker threads for ball computations (0 = default pool size).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Output file; defaults to stdout (or `$SGRAPH_OUT_DIR/<name>` when
    /// that variable is set).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a generator word to an encoded vertex and print the image.
    Act {
        /// Word in the generators, e.g. `abA` (uppercase = inverse);
        /// `-` is the identity.
        word: String,
        /// Canonical vertex encoding; `-` is the basepoint.
        #[arg(default_value = "-")]
        vertex: String,
    },
    /// Compare acceptors against brute-force oracles; prints JSON reports.
    Verify {
        target: VerifyTarget,
        /// Enumeration depth; defaults depend on the target.
        #[arg(long)]
        depth: Option<usize>,
        /// Cross-check radius.
        #[arg(long, default_value_t = 16)]
        radius: u32,
    },
    /// Export an artifact in DOT, CSV, or JSON.
    Export {
        target: ExportTarget,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Ball radius for graph exports.
        #[arg(long, default_value_t = 6)]
        radius: u32,
    },
    /// Compute a growth series (CSV) and its diagnostics (JSON).
    Growth {
        #[arg(long, value_enum, default_value_t = GrowthModel::Action)]
        model: GrowthModel,
        #[arg(long, default_value_t = 64)]
        radius: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Vertices,
    Pairs,
    EdgeA,
    EdgeB,
    Crosscheck,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportTarget {
    Machine,
    VertexDfa,
    PairsDfa,
    EdgeDfaA,
    EdgeDfaB,
    Graph,
    Intline,
    Stats,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GrowthModel {
    Action,
    Integer,
    LineControl,
    TreeControl,
}

#[derive(Serialize)]
struct CrosscheckOutput {
    alpha: i64,
    beta: i64,
    report: VerificationReport,
}

fn emit(cli: &Cli, default_name: &str, content: &str) -> schreier_automatic::Result<()> {
    let path = cli.out.clone().or_else(|| {
        std::env::var_os("SGRAPH_OUT_DIR").map(|dir| PathBuf::from(dir).join(default_name))
    });
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn generator(model: &ActionModel, name: &str) -> Option<GeneratorLetter> {
    model.machine().state(name).map(GeneratorLetter::pos)
}

fn edge_generators(model: &ActionModel, name: &str) -> schreier_automatic::Result<Vec<GeneratorLetter>> {
    let g = generator(model, name).ok_or_else(|| {
        Error::InvalidEncoding(format!("unknown generator `{name}`"))
    })?;
    Ok(vec![g, g.inverse()])
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let omega = OmegaSpec::parse(&cli.omega)?;
    match &cli.command {
        Command::Act { word, vertex } => {
            let model = ActionModel::new(MealyMachine::standard(), omega)?;
            let w = GroupWord::parse(model.machine(), if word == "-" { "" } else { word })?;
            let mut v = EncodedVertex::parse(if vertex == "-" { "" } else { vertex })?;
            for &g in &w.0 {
                v = model.act_vertex(g, &v)?;
            }
            emit(cli, "act.txt", &format!("{v}\n"))?;
            Ok(true)
        }
        Command::Verify { target, depth, radius } => {
            let model = ActionModel::new(MealyMachine::standard(), omega.clone())?;
            let mut reports: Vec<VerificationReport> = Vec::new();
            let mut extra_json = None;
            match target {
                VerifyTarget::Vertices => {
                    reports.push(verify_vertices(&model, depth.unwrap_or(16))?)
                }
                VerifyTarget::Pairs => reports.push(verify_pairs(&model, depth.unwrap_or(8))?),
                VerifyTarget::EdgeA | VerifyTarget::EdgeB => {
                    let name = if matches!(target, VerifyTarget::EdgeA) { "a" } else { "b" };
                    for g in edge_generators(&model, name)? {
                        reports.push(verify_edges(&model, g, depth.unwrap_or(12))?);
                    }
                }
                VerifyTarget::Crosscheck => {
                    let graph = IntegerGraph::build(&omega, -(1 << 14), 1 << 14, 16)?;
                    let map = find_correspondence(&model, &graph, 6)?;
                    let report = cross_check(&model, &graph, map, *radius)?;
                    extra_json = Some(
                        serde_json::to_string_pretty(&CrosscheckOutput {
                            alpha: map.alpha,
                            beta: map.beta,
                            report: report.clone(),
                        })
                        .expect("serializable"),
                    );
                    reports.push(report);
                }
                VerifyTarget::All => {
                    reports.extend(verify_all(&model, depth.unwrap_or(10))?);
                    let graph = IntegerGraph::build(&omega, -(1 << 14), 1 << 14, 16)?;
                    let map = find_correspondence(&model, &graph, 6)?;
                    reports.push(cross_check(&model, &graph, map, *radius)?);
                }
            }
            let pass = reports.iter().all(|r| r.pass);
            let body = extra_json
                .unwrap_or_else(|| serde_json::to_string_pretty(&reports).expect("serializable"));
            emit(cli, "verify.json", &format!("{body}\n"))?;
            Ok(pass)
        }
        Command::Export { target, format, radius } => {
            let model = ActionModel::new(MealyMachine::standard(), omega.clone())?;
            let unsupported =
                || Error::Malformed("unsupported format for this target; see --help".into());
            let (name, content) = match (target, format) {
                (ExportTarget::Machine, Format::Dot) => {
                    ("machine.dot".to_string(), model.machine().to_dot())
                }
                (ExportTarget::VertexDfa, Format::Dot) => (
                    "vertex_dfa.dot".to_string(),
                    vertex_dfa(&omega)?.to_dot("vertices"),
                ),
                (ExportTarget::PairsDfa, Format::Dot) => (
                    "pairs_dfa.dot".to_string(),
                    pairs_language(&vertex_dfa(&omega)?)?.to_dot("pairs"),
                ),
                (ExportTarget::EdgeDfaA | ExportTarget::EdgeDfaB, Format::Dot) => {
                    let n = if matches!(target, ExportTarget::EdgeDfaA) { "a" } else { "b" };
                    let g = edge_generators(&model, n)?[0];
                    (
                        format!("edge_dfa_{n}.dot"),
                        edge_relation_dfa(&model, g)?.to_dot(&format!("edge_{n}")),
                    )
                }
                (ExportTarget::Graph, Format::Dot) => (
                    "graph.dot".to_string(),
                    model.ball_dot(&EncodedVertex::root(), *radius)?,
                ),
                (ExportTarget::Graph, Format::Json) => (
                    "graph.json".to_string(),
                    model.ball_json(&EncodedVertex::root(), *radius)? + "\n",
                ),
                (ExportTarget::Intline, Format::Dot) => {
                    let g = IntegerGraph::build(&omega, -32, 32, 7)?;
                    ("intline.dot".to_string(), g.to_dot())
                }
                (ExportTarget::Intline, Format::Csv) => {
                    let g = IntegerGraph::build(&omega, -32, 32, 7)?;
                    ("intline.csv".to_string(), g.to_csv())
                }
                (ExportTarget::Stats, Format::Json) => (
                    "stats.json".to_string(),
                    serde_json::to_string_pretty(&structure_stats(&model)?)
                        .expect("serializable")
                        + "\n",
                ),
                _ => return Err(unsupported()),
            };
            emit(cli, &name, &content)?;
            Ok(true)
        }
        Command::Growth { model, radius } => {
            let series = match model {
                GrowthModel::Action => {
                    if *radius > 64 {
                        return Err(Error::InsufficientRadius(*radius));
                    }
                    let m = ActionModel::new(MealyMachine::standard(), omega)?;
                    action_series(&m, &EncodedVertex::root(), *radius)?
                }
                GrowthModel::Integer => {
                    let graph = IntegerGraph::build(&omega, -(1 << 16), 1 << 16, 18)?;
                    let m = ActionModel::new(MealyMachine::standard(), omega.clone())?;
                    let map = find_correspondence(&m, &graph, 6)?;
                    integer_series(&graph, map.apply(0), *radius)?
                }
                GrowthModel::LineControl => line_control_series(*radius),
                GrowthModel::TreeControl => tree_control_series(*radius),
            };
            series.check_invariants()?;
            let csv = to_csv(&series);
            let diag = if series.radius() >= 16 {
                Some(serde_json::to_string_pretty(&diagnostics(&series)?).expect("serializable"))
            } else {
                None
            };
            if cli.out.is_some() || std::env::var_os("SGRAPH_OUT_DIR").is_some() {
                emit(cli, "growth.csv", &csv)?;
                if let Some(d) = diag {
                    println!("{d}");
                }
            } else {
                print!("{csv}");
                if let Some(d) = diag {
                    eprintln!("{d}");
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
