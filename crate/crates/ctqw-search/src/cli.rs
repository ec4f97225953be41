//! Command-line front end.
//!
//! Six subcommands map onto the library's main entry points:
//!
//! * `sweep` — rate-comparison Monte Carlo over an `(n, p)` grid
//!   ([`crate::experiments::run_sweep`]), emitting per-series CSVs plus
//!   summary/comparison tables.
//! * `bounds` — one [`crate::spectral::BoundsReport`] as JSON.
//! * `evolve` — success-probability series for a single instance.
//! * `demo-phi` — the high-overlap state with unfindable tail vertices.
//! * `demo-detune` — peak degradation under hopping-rate detuning.
//! * `laplacian-gap` — spectral gap of `H₁ = I - c𝓛`.
//!
//! A `--config FILE` of flat `key = value` lines (keys mirror long flag
//! names) can supply any value; explicit flags win. Exit codes: 0 success,
//! 1 computational failure, 2 usage error. Data goes to stdout or files
//! under `--out`; diagnostics go to stderr. Same argv and files in, same
//! bytes out.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::evolution::{
    detuning_experiment, phi_counterexample, uniform_grid, Propagator, RateKind, SearchSetup,
};
use crate::experiments::{
    aas_statistics, emit_figure1_data, run_sweep, AasConfig, MarkedPolicy, PRule, SweepConfig,
};
use crate::graph::{complete_bipartite, complete_graph, sample_er, Graph};
use crate::rng::{derive_seed, SplitMix64};
use crate::spectral::{bound_report, h1_gap};

#[derive(Parser)]
#[command(
    name = "ctqw-search",
    version,
    about = "Continuous-time quantum-walk search on Erdős–Rényi graphs",
    propagate_version = true
)]
struct Cli {
    /// Flat key=value config file; explicit flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Output directory for generated files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Worker threads for parallel trials (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print progress to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the exact rate 1/λ₁(A) against 1/(np) across an (n, p) grid.
    Sweep(SweepArgs),
    /// Evaluate every concentration bound on one sampled graph.
    Bounds(BoundsArgs),
    /// Success-probability series for one (graph, rate, marked) instance.
    Evolve(EvolveArgs),
    /// Pass-rate table of the spectral bounds across an (n, p) grid.
    Aas(AasArgs),
    /// High-overlap state whose tail vertices are never found.
    DemoPhi(DemoPhiArgs),
    /// Peak success probability under detuned hopping rates.
    DemoDetune(DemoDetuneArgs),
    /// Spectral gap of H₁ = I − c·𝓛.
    LaplacianGap(LaplacianGapArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Vertex counts, comma-separated.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Explicit edge probabilities, comma-separated.
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<f64>>,
    /// Exponents a for p = n^-a, comma-separated.
    #[arg(long, value_delimiter = ',')]
    p_exp: Option<Vec<f64>>,
    /// Factor c for p = c·ln(n)/n.
    #[arg(long)]
    p_logfactor: Option<f64>,
    /// Graphs per (n, p) cell.
    #[arg(long)]
    trials: Option<usize>,
    /// Base seed; every trial seed derives from it.
    #[arg(long)]
    seed: Option<u64>,
    /// exact | simplified | both
    #[arg(long)]
    rate: Option<String>,
    /// random | <vertex index>
    #[arg(long)]
    marked: Option<String>,
    /// Bound constant C.
    #[arg(long = "C")]
    c: Option<f64>,
    /// Time-grid points per series.
    #[arg(long)]
    grid: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Vertex count for a sampled graph.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// Sampling seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Bound constant C.
    #[arg(long = "C")]
    c: Option<f64>,
    /// Edge-list file instead of sampling (requires --p for the bounds).
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct EvolveArgs {
    /// Edge-list file; alternative to --n/--p/--seed sampling.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Vertex count for a sampled graph.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for a sampled graph.
    #[arg(long)]
    p: Option<f64>,
    /// Sampling seed (also feeds the random marked-vertex draw).
    #[arg(long)]
    seed: Option<u64>,
    /// Hopping rate: exact | simplified | <number> | custom=<number>.
    #[arg(long)]
    gamma: Option<String>,
    /// random | <vertex index>
    #[arg(long)]
    marked: Option<String>,
    /// Time-grid points on [0, 2π√n].
    #[arg(long)]
    grid: Option<usize>,
}

#[derive(Args)]
struct AasArgs {
    /// Vertex counts, comma-separated.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Explicit edge probabilities, comma-separated.
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<f64>>,
    /// Exponents a for p = n^-a, comma-separated.
    #[arg(long, value_delimiter = ',')]
    p_exp: Option<Vec<f64>>,
    /// Factor c for p = c·ln(n)/n.
    #[arg(long)]
    p_logfactor: Option<f64>,
    /// Graphs per cell.
    #[arg(long)]
    trials: Option<usize>,
    /// Base seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Bound constant C.
    #[arg(long = "C")]
    c: Option<f64>,
}

#[derive(Args)]
struct DemoPhiArgs {
    /// Total vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Tail size: φ is uniform on the first n−f vertices, zero on the rest.
    #[arg(long)]
    f: Option<usize>,
}

#[derive(Args)]
struct DemoDetuneArgs {
    /// Edge-list file; alternative to --n/--p/--seed sampling.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Vertex count for a sampled graph.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for a sampled graph.
    #[arg(long)]
    p: Option<f64>,
    /// Sampling seed.
    #[arg(long)]
    seed: Option<u64>,
    /// random | <vertex index>
    #[arg(long)]
    marked: Option<String>,
    /// Relative detunings δ (γ = γ_exact·(1+δ)), comma-separated.
    /// Default: 0, 0.1/√n, 1/ln n.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    deltas: Option<Vec<f64>>,
}

#[derive(Args)]
struct LaplacianGapArgs {
    /// Complete bipartite graph K_{a,b} as "a,b".
    #[arg(long, value_name = "A,B")]
    bipartite: Option<String>,
    /// Complete graph K_n.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Edge-list file.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Coefficient c in H₁ = I − c·𝓛.
    #[arg(long)]
    coeff: Option<f64>,
}

/// Failures split by exit code: usage problems exit 2, computational
/// failures exit 1.
enum RunError {
    Usage(String),
    Failure(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Failure(e)
    }
}

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

/// Parsed `key = value` config file. Unknown keys are tolerated (the file
/// is shared across subcommands); malformed lines are usage errors.
struct ConfigMap(HashMap<String, String>);

impl ConfigMap {
    fn load(path: Option<&Path>) -> Result<ConfigMap, RunError> {
        let mut map = HashMap::new();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path).map_err(|e| {
                usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            for (idx, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let Some((key, value)) = line.split_once('=') else {
                    return Err(usage(format!(
                        "config {} line {}: expected key = value, got {line:?}",
                        path.display(),
                        idx + 1
                    )));
                };
                map.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
        Ok(ConfigMap(map))
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, RunError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                usage(format!("config key {key}: cannot parse {raw:?}"))
            }),
        }
    }

    fn get_list<T: FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, RunError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .split(',')
                .map(|s| s.trim().parse::<T>())
                .collect::<Result<Vec<T>, _>>()
                .map(Some)
                .map_err(|_| usage(format!("config key {key}: cannot parse {raw:?}"))),
        }
    }

    fn has(&self, key: &str) -> bool {
        self.0.contains_key(key)
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(RunError::Failure(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(cli: Cli) -> Result<(), RunError> {
    let cfg = ConfigMap::load(cli.config.as_deref())?;
    if let Some(threads) = cli.threads.or(cfg.get("threads")?) {
        if threads == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        // Ignore "already initialized": only possible in-process, not for
        // the standalone binary.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let out_dir = cli
        .out
        .or(cfg.get::<PathBuf>("out")?)
        .unwrap_or_else(|| PathBuf::from("ctqw-out"));
    let verbose = cli.verbose;
    match cli.command {
        Command::Sweep(args) => cmd_sweep(args, &cfg, &out_dir, verbose),
        Command::Bounds(args) => cmd_bounds(args, &cfg, &out_dir),
        Command::Evolve(args) => cmd_evolve(args, &cfg, &out_dir),
        Command::Aas(args) => cmd_aas(args, &cfg, &out_dir),
        Command::DemoPhi(args) => cmd_demo_phi(args, &cfg),
        Command::DemoDetune(args) => cmd_demo_detune(args, &cfg, &out_dir),
        Command::LaplacianGap(args) => cmd_laplacian_gap(args, &cfg),
    }
}

/// Resolve the p-rule from the three mutually exclusive flag groups; the
/// command line takes the whole group from the config file only when none
/// of the three flags is present.
fn resolve_p_rule(
    p: Option<Vec<f64>>,
    p_exp: Option<Vec<f64>>,
    p_logfactor: Option<f64>,
    cfg: &ConfigMap,
) -> Result<PRule, RunError> {
    let (p, p_exp, p_logfactor) =
        if p.is_none() && p_exp.is_none() && p_logfactor.is_none() {
            (
                cfg.get_list("p")?,
                cfg.get_list("p-exp")?,
                cfg.get("p-logfactor")?,
            )
        } else {
            (p, p_exp, p_logfactor)
        };
    match (p, p_exp, p_logfactor) {
        (Some(ps), None, None) => Ok(PRule::Explicit(ps)),
        (None, Some(exps), None) => Ok(PRule::Exponents(exps)),
        (None, None, Some(c)) => Ok(PRule::LogFactor(c)),
        (None, None, None) => Err(usage(
            "one of --p, --p-exp, --p-logfactor is required",
        )),
        _ => Err(usage(
            "--p, --p-exp and --p-logfactor are mutually exclusive",
        )),
    }
}

fn resolve_marked(
    flag: Option<String>,
    cfg: &ConfigMap,
) -> Result<MarkedPolicy, RunError> {
    let value = match flag.or(cfg.get("marked")?) {
        None => return Ok(MarkedPolicy::Random),
        Some(v) => v,
    };
    if value == "random" {
        return Ok(MarkedPolicy::Random);
    }
    value
        .parse::<usize>()
        .map(MarkedPolicy::Fixed)
        .map_err(|_| usage(format!("--marked must be `random` or a vertex index, got {value:?}")))
}

fn resolve_rates(flag: Option<String>, cfg: &ConfigMap) -> Result<Vec<RateKind>, RunError> {
    let value = flag
        .or(cfg.get("rate")?)
        .unwrap_or_else(|| "both".to_string());
    match value.as_str() {
        "exact" => Ok(vec![RateKind::Exact]),
        "simplified" => Ok(vec![RateKind::Simplified]),
        "both" => Ok(vec![RateKind::Exact, RateKind::Simplified]),
        other => Err(usage(format!(
            "--rate must be exact, simplified or both, got {other:?}"
        ))),
    }
}

fn ensure_out_dir(out_dir: &Path) -> Result<(), RunError> {
    std::fs::create_dir_all(out_dir).map_err(|e| {
        RunError::Failure(Error::WriteFailed {
            path: out_dir.display().to_string(),
            source: e,
        })
    })
}

fn write_out(path: &Path, contents: &str) -> Result<(), RunError> {
    std::fs::write(path, contents).map_err(|e| {
        RunError::Failure(Error::WriteFailed {
            path: path.display().to_string(),
            source: e,
        })
    })
}

fn cmd_sweep(
    args: SweepArgs,
    cfg: &ConfigMap,
    out_dir: &Path,
    verbose: u8,
) -> Result<(), RunError> {
    let n_list = args
        .n
        .or(cfg.get_list("n")?)
        .ok_or_else(|| usage("--n is required"))?;
    let p_rule = resolve_p_rule(args.p, args.p_exp, args.p_logfactor, cfg)?;
    let defaults = SweepConfig::default();
    let config = SweepConfig {
        n_list,
        p_rule,
        trials_per_cell: args
            .trials
            .or(cfg.get("trials")?)
            .unwrap_or(defaults.trials_per_cell),
        base_seed: args.seed.or(cfg.get("seed")?).unwrap_or(0),
        rate_kinds: resolve_rates(args.rate, cfg)?,
        marked_policy: resolve_marked(args.marked, cfg)?,
        c: args.c.or(cfg.get("C")?).unwrap_or(defaults.c),
        time_grid_size: args
            .grid
            .or(cfg.get("grid")?)
            .unwrap_or(defaults.time_grid_size),
    };
    if verbose > 0 {
        eprintln!(
            "sweep: {} n-values, {} trials/cell, seed {}",
            config.n_list.len(),
            config.trials_per_cell,
            config.base_seed
        );
    }
    let report = run_sweep(&config)?;
    ensure_out_dir(out_dir)?;
    let files = emit_figure1_data(&report, out_dir)?;
    if verbose > 0 {
        eprintln!("sweep: wrote {} files to {}", files.len(), out_dir.display());
    }
    for cell in report.cells.iter().filter(|c| c.failed) {
        eprintln!(
            "warning: cell n={} p={} marked failed ({} trials completed)",
            cell.n,
            cell.p,
            cell.trials.len()
        );
    }
    print!("{}", report.summary_csv());
    Ok(())
}

fn cmd_bounds(args: BoundsArgs, cfg: &ConfigMap, out_dir: &Path) -> Result<(), RunError> {
    let c = args.c.or(cfg.get("C")?).unwrap_or(2.0);
    let graph_path = args.graph.or(cfg.get("graph")?);
    let p = args.p.or(cfg.get("p")?);
    let (graph, tag) = match graph_path {
        Some(path) => {
            let p = p.ok_or_else(|| {
                usage("--p is required with --graph (the bounds need the nominal probability)")
            })?;
            let g = Graph::load_edge_list(&path)?.assume_p_nominal(p)?;
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".into());
            (g, stem)
        }
        None => {
            let n = args.n.or(cfg.get("n")?).ok_or_else(|| usage("--n is required"))?;
            let p = p.ok_or_else(|| usage("--p is required"))?;
            let seed = args.seed.or(cfg.get("seed")?).unwrap_or(0);
            (sample_er(n, p, seed)?, format!("n{n}_seed{seed}"))
        }
    };
    let report = bound_report(&graph, c)?;
    let json = report.to_json();
    ensure_out_dir(out_dir)?;
    let path = out_dir.join(format!("bounds_{tag}.json"));
    write_out(&path, &json)?;
    eprintln!("wrote {}", path.display());
    println!("{json}");
    Ok(())
}

/// Shared graph resolution for evolve/demo-detune: an edge-list file
/// (optionally given a nominal p) or a sampled ER graph.
fn resolve_graph(
    graph_path: Option<PathBuf>,
    n: Option<usize>,
    p: Option<f64>,
    seed: u64,
) -> Result<(Graph, String), RunError> {
    match graph_path {
        Some(path) => {
            let mut g = Graph::load_edge_list(&path)?;
            if let Some(p) = p {
                g = g.assume_p_nominal(p)?;
            }
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".into());
            Ok((g, stem))
        }
        None => {
            let n = n.ok_or_else(|| usage("--n is required without --graph"))?;
            let p = p.ok_or_else(|| usage("--p is required without --graph"))?;
            Ok((sample_er(n, p, seed)?, format!("n{n}_seed{seed}")))
        }
    }
}

/// Marked-vertex salt shared with the sweep harness ("mark" in ASCII).
const MARKED_SALT: u64 = 0x6d61_726b;

fn pick_marked(policy: MarkedPolicy, seed: u64, n: usize) -> usize {
    match policy {
        MarkedPolicy::Random => {
            SplitMix64::new(derive_seed(seed, &[MARKED_SALT])).below(n as u64) as usize
        }
        MarkedPolicy::Fixed(w) => w,
    }
}

fn parse_gamma(flag: Option<String>, cfg: &ConfigMap) -> Result<RateKind, RunError> {
    let value = flag
        .or(cfg.get("gamma")?)
        .unwrap_or_else(|| "exact".to_string());
    match value.as_str() {
        "exact" => Ok(RateKind::Exact),
        "simplified" => Ok(RateKind::Simplified),
        other => {
            let raw = other.strip_prefix("custom=").unwrap_or(other);
            let g: f64 = raw.parse().map_err(|_| {
                usage(format!(
                    "--gamma must be exact, simplified or a positive number, got {value:?}"
                ))
            })?;
            Ok(RateKind::Custom(g))
        }
    }
}

fn cmd_evolve(args: EvolveArgs, cfg: &ConfigMap, out_dir: &Path) -> Result<(), RunError> {
    let seed = args.seed.or(cfg.get("seed")?).unwrap_or(0);
    let n_arg = args.n.or(cfg.get("n")?);
    let p_arg = args.p.or(cfg.get("p")?);
    let graph_path = args.graph.or(cfg.get("graph")?);
    let (graph, tag) = resolve_graph(graph_path, n_arg, p_arg, seed)?;
    let n = graph.n();
    let marked = pick_marked(resolve_marked(args.marked, cfg)?, seed, n);
    let rate_kind = parse_gamma(args.gamma, cfg)?;
    let setup = SearchSetup::new(graph, rate_kind, marked)?;
    let grid_points = args.grid.or(cfg.get("grid")?).unwrap_or(2001);
    if grid_points < 2 {
        return Err(usage("--grid must be at least 2"));
    }
    let grid = uniform_grid(
        2.0 * std::f64::consts::PI * (n as f64).sqrt(),
        grid_points,
    );
    let series = Propagator::for_setup(&setup)?.series(&grid)?;
    ensure_out_dir(out_dir)?;
    let path = out_dir.join(format!(
        "evolve_{tag}_marked{marked}_{}.csv",
        setup.rate_kind.label()
    ));
    write_out(&path, &series.to_csv())?;
    eprintln!("wrote {}", path.display());
    let summary = serde_json::json!({
        "n": n,
        "marked": marked,
        "rate_kind": setup.rate_kind.label(),
        "gamma": setup.gamma,
        "t_star": series.t_star,
        "p_max": series.p_max,
        "series_file": path.display().to_string(),
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("json"));
    Ok(())
}

fn cmd_aas(args: AasArgs, cfg: &ConfigMap, out_dir: &Path) -> Result<(), RunError> {
    let n_list = args
        .n
        .or(cfg.get_list("n")?)
        .ok_or_else(|| usage("--n is required"))?;
    let p_rule = resolve_p_rule(args.p, args.p_exp, args.p_logfactor, cfg)?;
    let config = AasConfig {
        n_list,
        p_rule,
        trials: args.trials.or(cfg.get("trials")?).unwrap_or(20),
        c: args.c.or(cfg.get("C")?).unwrap_or(2.0),
        base_seed: args.seed.or(cfg.get("seed")?).unwrap_or(0),
    };
    let report = aas_statistics(&config)?;
    let csv = report.to_csv();
    ensure_out_dir(out_dir)?;
    let path = out_dir.join("aas_rates.csv");
    write_out(&path, &csv)?;
    eprintln!("wrote {}", path.display());
    print!("{csv}");
    Ok(())
}

fn cmd_demo_phi(args: DemoPhiArgs, cfg: &ConfigMap) -> Result<(), RunError> {
    let n = args.n.or(cfg.get("n")?).ok_or_else(|| usage("--n is required"))?;
    let f = args.f.or(cfg.get("f")?).ok_or_else(|| usage("--f is required"))?;
    let r = phi_counterexample(n, f)?;
    println!("n={} f={}", r.n, r.f);
    println!("overlap={}", r.overlap);
    println!("predicted_overlap={}", (1.0 - f as f64 / n as f64).sqrt());
    println!("worst_tail_probability={}", r.worst_tail_probability);
    println!("uniform_baseline=1/n={}", 1.0 / n as f64);
    for (w, p) in &r.tail_max {
        println!("tail vertex {w}: max probability {p}");
    }
    Ok(())
}

fn cmd_demo_detune(
    args: DemoDetuneArgs,
    cfg: &ConfigMap,
    out_dir: &Path,
) -> Result<(), RunError> {
    let seed = args.seed.or(cfg.get("seed")?).unwrap_or(0);
    let n_arg = args.n.or(cfg.get("n")?);
    let p_arg = args.p.or(cfg.get("p")?);
    let graph_path = args.graph.or(cfg.get("graph")?);
    let (graph, tag) = resolve_graph(graph_path, n_arg, p_arg, seed)?;
    let n = graph.n();
    let marked = pick_marked(resolve_marked(args.marked, cfg)?, seed, n);
    let deltas = match args.deltas {
        Some(d) => d,
        None => match cfg.get_list("deltas")? {
            Some(d) => d,
            // Baseline, a within-tolerance offset, and one past it.
            None => vec![0.0, 0.1 / (n as f64).sqrt(), 1.0 / (n as f64).ln()],
        },
    };
    let points = detuning_experiment(&graph, marked, &deltas)?;
    let mut csv = String::from("delta,gamma,t_star,p_max\n");
    for pt in &points {
        let _ = writeln!(csv, "{},{},{},{}", pt.delta, pt.gamma, pt.t_star, pt.p_max);
    }
    ensure_out_dir(out_dir)?;
    let path = out_dir.join(format!("detune_{tag}_marked{marked}.csv"));
    write_out(&path, &csv)?;
    eprintln!("wrote {}", path.display());
    print!("{csv}");
    Ok(())
}

fn cmd_laplacian_gap(args: LaplacianGapArgs, cfg: &ConfigMap) -> Result<(), RunError> {
    let coeff = args.coeff.or(cfg.get("coeff")?).unwrap_or(1.0);
    let bipartite = args.bipartite.or(cfg.get("bipartite")?);
    let complete = args.complete.or(cfg.get("complete")?);
    let graph_path: Option<PathBuf> = match args.graph {
        Some(p) => Some(p),
        None if cfg.has("graph") => cfg.get("graph")?,
        None => None,
    };
    let sources = bipartite.is_some() as usize
        + complete.is_some() as usize
        + graph_path.is_some() as usize;
    if sources != 1 {
        return Err(usage(
            "exactly one of --bipartite, --complete, --graph is required",
        ));
    }
    let graph = if let Some(spec) = bipartite {
        let (a, b) = spec
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or_else(|| usage(format!("--bipartite expects `a,b`, got {spec:?}")))?;
        complete_bipartite(a, b)?
    } else if let Some(n) = complete {
        complete_graph(n)?
    } else {
        Graph::load_edge_list(graph_path.expect("checked above"))?
    };
    let gap = h1_gap(&graph, coeff)?;
    println!("{gap}");
    Ok(())
}
