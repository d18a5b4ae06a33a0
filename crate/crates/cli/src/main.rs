//! `hornmodal` command-line frontend.
//!
//! Exit codes:
//!
//! | code | meaning                                                     |
//! |------|-------------------------------------------------------------|
//! | 0    | success; `classify`: NP-complete                            |
//! | 1    | `classify`: PSPACE-hard                                     |
//! | 2    | unreadable input, parse error or bad argument               |
//! | 3    | internal error: a constructed model failed re-checking     |
//! | 10   | `sat`: satisfiable                                          |
//! | 20   | `sat`: unsatisfiable, or no model within the world bound    |
//! | 30   | bounds or step limit exhausted, or unsupported logic        |

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hornmodal::classification::{classify, Bounds, ClassificationOutcome, ClassifyError};
use hornmodal::frames::{closure, shrink, unravel};
use hornmodal::logic::zoo;
use hornmodal::reductions::{parse_qbf, qbf_to_modal};
use hornmodal::solvers::{
    sat_oracle_trusted, sat_oracle_with, OracleConfig, SatResult, SolverError, Status, TableauConfig, TableauMode,
    TableauSolver,
};
use hornmodal::{parse_horn, parse_modal, HornFormula, KripkeModel, ModalFormula, TypesList};
use serde_json::json;
use thiserror::Error;

const EXIT_NP: u8 = 0;
const EXIT_PSPACE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_SAT: u8 = 10;
const EXIT_UNSAT: u8 = 20;
const EXIT_LIMIT: u8 = 30;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hornmodal",
    version,
    about = "Classify and decide modal logics given by universal Horn frame conditions"
)]
struct Cli {
    /// Output format; text is for humans and may change between versions.
    #[arg(long, value_enum, default_value_t = Format::Json, env = "HORNMODAL_FORMAT", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Oracle,
    Tableau,
}

#[derive(Args, Debug)]
struct BoundArgs {
    /// Largest tree searched per clause (default: derived from the clause).
    #[arg(long, env = "HORNMODAL_TREE_NODES", value_parser = clap::value_parser!(u64).range(1..))]
    tree_nodes: Option<u64>,
    /// Longest types-list line searched per clause (default: derived).
    #[arg(long, env = "HORNMODAL_LINE_LEN", value_parser = clap::value_parser!(u64).range(1..))]
    line_len: Option<u64>,
    /// Largest k for which trans^k may be added.
    #[arg(long, env = "HORNMODAL_TRANS_CAP", default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    trans_cap: u64,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            tree_nodes: self.tree_nodes.map(|n| n as usize),
            line_len: self.line_len.map(|n| n as usize),
            trans_cap: self.trans_cap as usize,
        }
    }
}

#[derive(Args, Debug)]
struct FormulaArgs {
    /// Modal formula: a file, or the formula itself if no such file exists.
    #[arg(long, conflicts_with = "formula_inline", required_unless_present = "formula_inline")]
    formula: Option<String>,
    #[arg(long)]
    formula_inline: Option<String>,
}

impl FormulaArgs {
    fn load(&self) -> Result<ModalFormula, CliError> {
        let text = match (&self.formula, &self.formula_inline) {
            (_, Some(s)) => s.clone(),
            (Some(f), None) if Path::new(f).is_file() => read(Path::new(f))?,
            (Some(f), None) => f.clone(),
            (None, None) => unreachable!("clap requires one of the two"),
        };
        parse_modal(text.trim()).map_err(|e| CliError::Parse(format!("formula: {e}")))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the logic is NP-complete or PSPACE-hard.
    Classify {
        /// Horn clauses, one per line; `empty` or a standard logic name
        /// (K, T, B, K4, S4, TB, S5, K4B, K5) also work.
        #[arg(long)]
        logic: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Decide satisfiability of a formula over the frames of a logic.
    Sat {
        #[arg(long)]
        logic: String,
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, value_enum, default_value_t = EngineArg::Oracle, env = "HORNMODAL_ENGINE")]
        engine: EngineArg,
        /// World bound for the oracle.
        #[arg(long, default_value_t = 5, env = "HORNMODAL_MAX_WORLDS", value_parser = clap::value_parser!(u64).range(1..))]
        max_worlds: u64,
        /// Treat this world bound as complete (only for NP-complete logics).
        #[arg(long, env = "HORNMODAL_TRUSTED_BOUND", value_parser = clap::value_parser!(u64).range(1..))]
        trusted_bound: Option<u64>,
        /// Tableau: build the tree depth first and forget nodes out of reach.
        #[arg(long, env = "HORNMODAL_WINDOW")]
        window: bool,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Translate a quantified boolean formula into a modal formula.
    Qbf2modal {
        /// e.g. "A p E q : (p & q) | (~p & ~q)"
        #[arg(long)]
        qbf: String,
    },
    /// Close a graph under refl, symm and trans^k.
    Closure {
        /// Comma separated: refl, symm, trans, transK.
        #[arg(long)]
        types: String,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Keep only the worlds needed for a formula to stay true at a world.
    Shrink {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        formula: FormulaArgs,
        /// Defaults to the model's root, then world 0.
        #[arg(long)]
        world: Option<usize>,
    },
    /// Unravel a model into a tree of bounded depth.
    Unravel {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        world: Option<usize>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error in {0}")]
    Parse(String),
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Argument(_) => EXIT_INPUT,
            CliError::Classify(_) => EXIT_LIMIT,
            CliError::Solver(SolverError::VerificationFailed(_)) => EXIT_INTERNAL,
            CliError::Solver(_) => EXIT_LIMIT,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_logic(arg: &str) -> Result<HornFormula, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return parse_horn(&read(path)?).map_err(|e| CliError::Parse(format!("{arg}: {e}")));
    }
    if arg.eq_ignore_ascii_case("empty") {
        return Ok(HornFormula::empty());
    }
    zoo::logic(arg).ok_or_else(|| CliError::Argument(format!("no such file or logic name: {arg}")))
}

fn load_model(path: &Path) -> Result<KripkeModel, CliError> {
    KripkeModel::from_json(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn pick_world(m: &KripkeModel, world: Option<usize>) -> Result<usize, CliError> {
    let w = world.or(m.root).unwrap_or(0);
    if w >= m.n() {
        return Err(CliError::Argument(format!("world {w} out of range for a model with {} worlds", m.n())));
    }
    Ok(w)
}

fn emit(format: Format, value: &serde_json::Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => println!("{}", text()),
    }
}

fn report_classification(format: Format, out: &ClassificationOutcome) {
    let value = serde_json::to_value(out).expect("outcome serializes");
    emit(format, &value, || {
        let mut s = format!("verdict: {}\ntypes-list: {}\n", value["verdict"].as_str().unwrap_or("?"), out.types_list);
        for step in &out.trace {
            let clause = step.clause.map_or("-".to_string(), |c| c.to_string());
            let k = step.k.map_or(String::new(), |k| format!(" k={k}"));
            s += &format!(
                "  clause {clause}: {}{k}\n",
                serde_json::to_value(step.case).expect("case serializes").as_str().unwrap_or("?")
            );
        }
        s.trim_end().to_string()
    });
}

fn run_sat(
    psi: &HornFormula,
    phi: &ModalFormula,
    engine: EngineArg,
    max_worlds: usize,
    trusted: Option<usize>,
    window: bool,
    bounds: &Bounds,
) -> Result<SatResult, SolverError> {
    if let Some(bound) = trusted {
        return sat_oracle_trusted(psi, phi, bound, bounds);
    }
    match engine {
        EngineArg::Oracle => sat_oracle_with(psi, phi, OracleConfig { max_worlds, ..OracleConfig::default() }),
        EngineArg::Tableau => {
            let mode = if window { TableauMode::Agenda } else { TableauMode::Auto };
            let cfg = TableauConfig { window, mode, ..TableauConfig::default() };
            TableauSolver::new(psi, bounds, cfg)?.solve(phi)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Classify { logic, bounds } => {
            let psi = load_logic(&logic)?;
            let out = classify(&psi, &bounds.bounds())?;
            report_classification(format, &out);
            Ok(if out.is_np() { EXIT_NP } else { EXIT_PSPACE })
        }
        Command::Sat { logic, formula, engine, max_worlds, trusted_bound, window, bounds } => {
            let psi = load_logic(&logic)?;
            let phi = formula.load()?;
            let r = run_sat(
                &psi,
                &phi,
                engine,
                max_worlds as usize,
                trusted_bound.map(|b| b as usize),
                window,
                &bounds.bounds(),
            )?;
            let value = serde_json::to_value(&r).expect("result serializes");
            emit(format, &value, || match &r.status {
                Status::Sat { model, world } => {
                    format!("sat at world {world} of {} worlds\n{}", model.n(), model.to_json())
                }
                Status::UnsatWithinBound { bound } => format!("no model with at most {bound} worlds"),
                Status::Unsat => "unsat".to_string(),
            });
            Ok(if r.is_sat() { EXIT_SAT } else { EXIT_UNSAT })
        }
        Command::Qbf2modal { qbf } => {
            let chi = parse_qbf(&qbf).map_err(|e| CliError::Parse(format!("qbf: {e}")))?;
            let phi = qbf_to_modal(&chi).to_string();
            emit(format, &json!({ "formula": phi }), || phi.clone());
            Ok(0)
        }
        Command::Closure { types, graph } => {
            let t: TypesList = types.parse().map_err(|e| CliError::Argument(format!("{e}")))?;
            let mut m = load_model(&graph)?;
            m.graph = closure(&m.graph, &t);
            let value = m.to_json();
            emit(format, &value, || format!("{} worlds, {} edges\n{value}", m.n(), m.graph.edge_count()));
            Ok(0)
        }
        Command::Shrink { graph, formula, world } => {
            let m = load_model(&graph)?;
            let phi = formula.load()?;
            let w = pick_world(&m, world)?;
            let s = shrink(&m, w, &phi).map_err(|e| CliError::Argument(e.to_string()))?;
            let value = s.to_json();
            emit(format, &value, || format!("{} of {} worlds kept\n{value}", s.n(), m.n()));
            Ok(0)
        }
        Command::Unravel { graph, depth, world } => {
            let m = load_model(&graph)?;
            let w = pick_world(&m, world)?;
            let (tree, f) = unravel(&m, w, depth);
            let value = json!({ "model": tree.to_json(), "map": f.map, "frontier": f.frontier });
            emit(format, &value, || {
                let map: Vec<String> = f.map.iter().enumerate().map(|(u, t)| format!("{u}->{t}")).collect();
                format!("{} tree nodes\nmap: {}\n{}", tree.n(), map.join(" "), tree.to_json())
            });
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
