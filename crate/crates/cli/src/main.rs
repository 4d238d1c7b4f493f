//! `genergy`: generate random graphs, analyze energy bounds, and run the
//! Monte Carlo experiments.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graph_energy::asymptotics::{
    ba_limit_constant, er_f, er_f_closed_upper, hypoenergetic_check, HYPOENERGETIC_TERMS,
};
use graph_energy::bounds::{ad_tp_comparison, equality_condition_check, BoundReport};
use graph_energy::experiment::{
    read_csv, render_svg, run_experiment, sachs_check, write_csv, ExperimentConfig, Summary,
    BA_REFERENCE_TERMS, ER_REFERENCE_TERMS, SACHS_CHECK_MAX_N,
};
use graph_energy::graph::{load_edge_list, write_edge_list};
use graph_energy::random::{GenSpec, Model};
use graph_energy::spectral::{sachs_char_poly, spectrum, WeightedGraph};
use graph_energy::Error;

#[derive(Parser)]
#[command(name = "genergy", version, about = "Graph energy bounds and random-graph experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph as an edge list
    Gen(GenArgs),
    /// Energy, bounds and degree statistics of an edge-list file, as JSON
    Analyze(AnalyzeArgs),
    /// Seeded Monte Carlo run: per-trial CSV plus a JSON summary
    Experiment(ExperimentArgs),
    /// Evaluate the asymptotic per-vertex bounds
    Asymptotic(AsymptoticArgs),
    /// Cross-check Sachs coefficients against the eigenvalue expansion
    SachsCheck(SachsArgs),
    /// Render an experiment CSV as an SVG scatter plot
    Plot(PlotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Ba,
    Er,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Ba => Model::BaTree,
            ModelArg::Er => Model::Er,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    n: usize,
    /// Expected degree (ER only; p = lambda / n)
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    path: PathBuf,
    /// Include the Sachs characteristic polynomial (n <= 12)
    #[arg(long)]
    sachs: bool,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, value_enum, default_value = "ba")]
    model: ModelArg,
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads (0 = all cores); does not affect the output
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// CSV output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the JSON summary to this path
    #[arg(long)]
    json: Option<PathBuf>,
    /// n = 2000 with 200 trials
    #[arg(long)]
    paper_scale: bool,
}

#[derive(Args)]
struct AsymptoticArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    lambda: Option<f64>,
    /// Series truncation index
    #[arg(long)]
    terms: Option<usize>,
}

#[derive(Args)]
struct SachsArgs {
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct PlotArgs {
    csv: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

type CmdResult = Result<(), Failure>;

fn write_output(path: Option<&Path>, bytes: &[u8]) -> CmdResult {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Runtime(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Runtime(e.to_string())),
    }
}

fn pretty(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s.into_bytes()
}

fn cmd_gen(args: GenArgs) -> CmdResult {
    let spec = GenSpec {
        model: args.model.into(),
        n: args.n,
        lambda: args.lambda,
        seed: args.seed,
    };
    spec.validate()?;
    let g = spec.generate()?;
    let mut buf = Vec::new();
    write_edge_list(&g, &mut buf).map_err(|e| Failure::Runtime(e.to_string()))?;
    write_output(args.out.as_deref(), &buf)?;
    eprintln!("n={} edges={}", g.n(), g.edge_count());
    Ok(())
}

/// Tolerance for flagging a bound as attained.
const EQUALITY_TOL: f64 = 1e-9;

fn cmd_analyze(args: AnalyzeArgs) -> CmdResult {
    let g = load_edge_list(&args.path)?;
    if args.sachs && g.n() > SACHS_CHECK_MAX_N {
        return Err(Failure::Usage(format!(
            "--sachs needs n <= {SACHS_CHECK_MAX_N}, graph has {}",
            g.n()
        )));
    }
    let profile = g.degree_profile();
    let spec = spectrum(&g)?;
    let bounds = BoundReport::with_profile(&g, &profile);
    let attained: Vec<&str> = bounds
        .applicable()
        .into_iter()
        .filter(|&(_, b)| (b - spec.energy).abs() <= EQUALITY_TOL)
        .map(|(name, _)| name)
        .collect();

    let mut report = json!({
        "schema_version": 1,
        "n": g.n(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "is_tree": g.is_tree(),
        "energy": spec.energy,
        "energy_per_n": if g.n() > 0 { spec.energy / g.n() as f64 } else { 0.0 },
        "eigenvalues": spec.eigenvalues,
        "bounds": bounds,
        "attained": attained,
        "profile": {
            "leaves": profile.leaves.len(),
            "inner": profile.inner.len(),
            "isolated": profile.isolated.len(),
            "e11": profile.e11,
            "max_degree": profile.max_degree(),
            "hist_degree": profile.hist_degree,
            "hist_leaf_parent": profile.hist_leaf_parent,
        },
    });
    if let Ok(k) = equality_condition_check(&g) {
        report["equality_constant"] = json!(k);
    }
    if let Ok(c) = ad_tp_comparison(&g) {
        report["ad_tp_comparison"] = json!(c);
    }
    if args.sachs {
        let poly = sachs_char_poly(&WeightedGraph::from_graph(&g))?;
        report["char_poly"] = json!(poly.coeffs);
    }
    write_output(args.out.as_deref(), &pretty(&report))
}

fn cmd_experiment(args: ExperimentArgs) -> CmdResult {
    let mut config = ExperimentConfig {
        model: args.model.into(),
        n: args.n,
        trials: args.trials,
        lambda: args.lambda,
        seed: args.seed,
        threads: args.threads,
    };
    if args.paper_scale {
        config = config.paper_scale();
        eprintln!(
            "warning: --paper-scale runs {} trials at n = {}; each trial is an O(n^3) eigendecomposition",
            config.trials, config.n
        );
    }
    config.validate()?;
    let rows = run_experiment(&config)?;
    let mut csv = Vec::new();
    write_csv(&config, &rows, &mut csv)?;
    write_output(args.out.as_deref(), &csv)?;

    let summary = Summary::new(&config, &rows)?;
    let text = pretty(&json!(summary));
    if let Some(path) = &args.json {
        fs::write(path, &text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    }
    if args.out.is_some() {
        write_output(None, &text)?;
    }
    Ok(())
}

fn cmd_asymptotic(args: AsymptoticArgs) -> CmdResult {
    let report = match args.model {
        ModelArg::Ba => {
            let terms = args.terms.unwrap_or(BA_REFERENCE_TERMS);
            let s = ba_limit_constant(terms)?;
            json!({
                "schema_version": 1,
                "model": "ba",
                "terms": s.terms_used,
                "value": s.value,
                "truncation_bound": s.truncation_bound,
                "upper": s.upper(),
            })
        }
        ModelArg::Er => {
            let lambda = args
                .lambda
                .ok_or_else(|| Failure::Usage("--lambda is required for --model er".into()))?;
            let terms = args.terms.unwrap_or(ER_REFERENCE_TERMS);
            let s = er_f(lambda, terms)?;
            json!({
                "schema_version": 1,
                "model": "er",
                "lambda": lambda,
                "terms": s.terms_used,
                "value": s.value,
                "truncation_bound": s.truncation_bound,
                "upper": s.upper(),
                "closed_upper": er_f_closed_upper(lambda)?,
                "hypoenergetic": hypoenergetic_check(lambda)?,
                "hypoenergetic_terms": HYPOENERGETIC_TERMS,
            })
        }
    };
    write_output(None, &pretty(&report))
}

fn cmd_sachs_check(args: SachsArgs) -> CmdResult {
    let report = sachs_check(args.n, args.trials, args.seed, args.threads)?;
    write_output(None, &pretty(&json!(report)))?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Runtime(format!(
            "max deviation {} exceeds {}",
            report.max_deviation, report.tolerance
        )))
    }
}

fn cmd_plot(args: PlotArgs) -> CmdResult {
    let file = fs::File::open(&args.csv)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", args.csv.display())))?;
    let table = read_csv(file)?;
    let svg = render_svg(&table)?;
    write_output(Some(&args.out), svg.as_bytes())?;
    eprintln!("{} trials plotted to {}", table.rows.len(), args.out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Experiment(a) => cmd_experiment(a),
        Command::Asymptotic(a) => cmd_asymptotic(a),
        Command::SachsCheck(a) => cmd_sachs_check(a),
        Command::Plot(a) => cmd_plot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
