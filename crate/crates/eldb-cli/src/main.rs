//! Batch front end: graph generation, solving, formula sweeps, and the
//! EXACT 3-SAT reduction, with machine-readable output and documented
//! exit codes.
//!
//! Exit status: 0 success/feasible, 1 operational error or failed check,
//! 2 infeasible, 3 solver budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use eldb::formulas;
use eldb::reduction;
use eldb::solver::{self, SolverConfig};
use eldb::sweep::{self, Suite};
use eldb::{
    all_pairs_distances, build_tk, generate, parse_graph, product, serialize_graph,
    serialize_labels, subdivided_star, Family, Graph, ProductKind,
};

#[derive(Parser)]
#[command(
    name = "eldb",
    version,
    about = "Efficient k-limited broadcast domination laboratory"
)]
struct Cli {
    /// Reserved for future randomized features; the solvers are
    /// deterministic and ignore it.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph (family, tree gadget, or product) into a file.
    Gen(GenArgs),
    /// Solve one objective on a graph file and emit a JSON result.
    Solve(SolveArgs),
    /// Run a formula-vs-solver sweep suite and emit its report.
    Sweep(SweepArgs),
    /// Build the reduction gadget for an EXACT 3-SAT instance.
    Reduce(ReduceArgs),
    /// Build the gadget and empirically check the reduction equivalence.
    VerifyReduction(VerifyArgs),
    /// Print closed-form values for a family instance (no solver runs).
    CheckFormulas(CheckFormulasArgs),
}

#[derive(Args)]
struct GenArgs {
    /// One of: path, cycle, complete, star, subdivided-star, tk.
    #[arg(long, conflicts_with = "product")]
    family: Option<String>,
    /// Vertex count for families; star count n for subdivided-star.
    #[arg(long)]
    n: Option<usize>,
    /// Subdivision count for subdivided-star.
    #[arg(long)]
    i: Option<usize>,
    /// Tree parameter for tk.
    #[arg(long)]
    k: Option<usize>,
    /// Product kind: lexicographic, strong, or cartesian.
    #[arg(long, requires = "left", requires = "right")]
    product: Option<String>,
    /// Left factor graph file.
    #[arg(long)]
    left: Option<PathBuf>,
    /// Right factor graph file.
    #[arg(long)]
    right: Option<PathBuf>,
    /// Output graph file; labels go to <out>.labels.json when present.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ObjectiveArg {
    Exists,
    Mincost,
    Maxcover,
    Mcr,
    #[value(name = "mincost-no1")]
    MincostNo1,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    /// Cost cap; required for exists/mincost/maxcover, rejected otherwise.
    #[arg(long)]
    k: Option<usize>,
    /// Search node budget.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Also write the JSON result here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SweepArgs {
    /// One of: paths, cycles, stars, lex, strong, bounds, all.
    #[arg(long)]
    suite: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// DIMACS CNF input (three distinct-variable literals per clause).
    #[arg(long)]
    cnf: PathBuf,
    /// Gadget parameter, at least 2.
    #[arg(long)]
    k: usize,
    /// Output graph file; role labels go to <out>.labels.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    cnf: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckFormulasArgs {
    /// One of: path, cycle, subdivided-star, lex-path, lex-cycle.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Radius of the second lexicographic factor.
    #[arg(long)]
    rad_h: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::VerifyReduction(args) => cmd_verify_reduction(args),
        Command::CheckFormulas(args) => cmd_check_formulas(args),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_graph_files(g: &Graph, out: &Path) -> Result<()> {
    fs::write(out, serialize_graph(g)).with_context(|| format!("writing {}", out.display()))?;
    if let Some(labels) = serialize_labels(g) {
        let label_path = sidecar_labels_path(out);
        fs::write(&label_path, labels + "\n")
            .with_context(|| format!("writing {}", label_path.display()))?;
    }
    Ok(())
}

fn sidecar_labels_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".labels.json");
    out.with_file_name(name)
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let g = match (&args.family, &args.product) {
        (Some(family), None) => match family.as_str() {
            "subdivided-star" => {
                let i = args.i.context("--family subdivided-star needs --i")?;
                let n = args.n.context("--family subdivided-star needs --n")?;
                subdivided_star(i, n)?
            }
            "tk" => {
                let k = args.k.context("--family tk needs --k")?;
                build_tk(k)?
            }
            name => {
                let family: Family = name.parse()?;
                let n = args.n.context("--family needs --n")?;
                generate(family, n)?
            }
        },
        (None, Some(kind)) => {
            let kind: ProductKind = kind.parse()?;
            let left = read_graph(args.left.as_ref().expect("clap enforces --left"))?;
            let right = read_graph(args.right.as_ref().expect("clap enforces --right"))?;
            product(kind, &left, &right)
        }
        _ => bail!("exactly one of --family or --product is required"),
    };
    write_graph_files(&g, &args.out)?;
    let d = all_pairs_distances(&g)?;
    println!(
        "n={} m={} radius={} diameter={}",
        g.vertex_count(),
        g.edge_count(),
        d.radius(),
        d.diameter()
    );
    Ok(0)
}

fn cmd_solve(args: SolveArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let (objective, needs_k) = match args.objective {
        ObjectiveArg::Exists => (solver::Objective::Exists, true),
        ObjectiveArg::Mincost => (solver::Objective::MinCost, true),
        ObjectiveArg::Maxcover => (solver::Objective::MaxCoverage, true),
        ObjectiveArg::Mcr => (solver::Objective::Mcr, false),
        ObjectiveArg::MincostNo1 => (solver::Objective::MinKNoCostOne, false),
    };
    if needs_k && args.k.is_none() {
        bail!("this objective needs --k");
    }
    if !needs_k && args.k.is_some() {
        bail!("this objective determines k itself; drop --k");
    }
    let cfg = SolverConfig {
        node_limit: args.node_limit.unwrap_or(solver::DEFAULT_NODE_LIMIT),
        ..SolverConfig::default()
    };
    let result = solver::solve(&g, objective, args.k, &cfg)?;
    let json = serde_json::to_string_pretty(&result)? + "\n";
    if let Some(out) = &args.out {
        fs::write(out, &json).with_context(|| format!("writing {}", out.display()))?;
    }
    print!("{json}");
    Ok(if result.exhausted {
        3
    } else if result.feasible {
        0
    } else {
        2
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<u8> {
    let suite: Suite = args.suite.parse()?;
    let report = sweep::run_suite(suite);
    let rendered = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    if let Some(out) = &args.out {
        fs::write(out, &rendered).with_context(|| format!("writing {}", out.display()))?;
    }
    print!("{rendered}");
    let failures = report.failures();
    for f in &failures {
        eprintln!(
            "sweep failure: {} {} {} formula={} solver={}",
            f.family, f.params, f.quantity, f.formula, f.solver
        );
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn read_cnf(path: &Path) -> Result<reduction::CnfFormula> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    reduction::parse_cnf(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_reduce(args: ReduceArgs) -> Result<u8> {
    let cnf = read_cnf(&args.cnf)?;
    let rg = reduction::build_reduction(&cnf, args.k)?;
    write_graph_files(&rg.graph, &args.out)?;
    println!(
        "n={} m={} variables={} clauses={} k={}",
        rg.graph.vertex_count(),
        rg.graph.edge_count(),
        cnf.variable_count,
        cnf.clauses.len(),
        args.k
    );
    Ok(0)
}

fn cmd_verify_reduction(args: VerifyArgs) -> Result<u8> {
    let cnf = read_cnf(&args.cnf)?;
    let cfg = SolverConfig {
        node_limit: args.node_limit.unwrap_or(solver::DEFAULT_NODE_LIMIT),
        ..SolverConfig::default()
    };
    let report = reduction::verify_reduction_with(&cnf, args.k, &cfg)?;
    let json = serde_json::to_string_pretty(&report)? + "\n";
    if let Some(out) = &args.out {
        fs::write(out, &json).with_context(|| format!("writing {}", out.display()))?;
    }
    print!("{json}");
    Ok(if report.exhausted {
        3
    } else if report.equivalence_holds && report.roundtrip_failures == 0 && report.witness_shape_ok
    {
        0
    } else {
        1
    })
}

fn cmd_check_formulas(args: CheckFormulasArgs) -> Result<u8> {
    let results: Vec<formulas::FormulaResult> = match args.family.as_str() {
        "path" => {
            let n = args.n.context("--family path needs --n")?;
            let k = args.k.unwrap_or(1);
            vec![formulas::path_gamma(n, k)]
        }
        "cycle" => {
            let n = args.n.context("--family cycle needs --n")?;
            vec![formulas::cycle_mcr(n), formulas::cycle_gamma(n)]
        }
        "subdivided-star" => {
            let i = args.i.context("--family subdivided-star needs --i")?;
            let n = args.n.context("--family subdivided-star needs --n")?;
            vec![
                formulas::subdivided_star_mcr(n),
                formulas::subdivided_star_gamma(i, n),
            ]
        }
        "lex-path" => {
            let m = args.m.context("--family lex-path needs --m")?;
            let rad_h = args.rad_h.context("--family lex-path needs --rad-h")?;
            let r = formulas::lex_path(m, rad_h);
            let mut out = vec![r.mcr];
            out.extend(r.gamma_eb2);
            out
        }
        "lex-cycle" => {
            let m = args.m.context("--family lex-cycle needs --m")?;
            let rad_h = args.rad_h.context("--family lex-cycle needs --rad-h")?;
            let r = formulas::lex_cycle_mcr(m, rad_h);
            vec![r.case_table, r.oracle]
        }
        other => bail!("unknown formula family {other:?}"),
    };
    println!("{}", serde_json::to_string_pretty(&results)?);
    Ok(0)
}
