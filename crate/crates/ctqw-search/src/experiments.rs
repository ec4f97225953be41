//! Monte-Carlo harness: rate-comparison sweeps over `(n, p)` grids and
//! empirical pass-rate tables for the concentration bounds.
//!
//! The headline experiment ([`run_sweep`]) contrasts the exact hopping rate
//! `1/λ₁(A)` with the simplification `1/(np)` on random graphs: for each
//! cell it samples connected graphs, finds the optimal measurement time `T`
//! under the exact rate, runs both rates over `[0, 2T]`, and aggregates the
//! peak success probabilities. [`aas_statistics`] checks how often each
//! spectral bound holds across the same kind of grid — the bounds are
//! asymptotic, so the interesting output is a pass *rate* per cell and its
//! trend in `n`. Everything is deterministic given `base_seed`: per-trial
//! seeds are derived from `(base_seed, n, p-index, trial, attempt)`, never
//! from execution order, so cells can run in any order (or in parallel)
//! without changing a single output byte.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evolution::{
    uniform_grid, EvolutionSeries, Propagator, RateKind, SearchSetup,
};
use crate::graph::{sample_er, Graph};
use crate::rng::{derive_seed, SplitMix64};
use crate::spectral::{bound_report_with, eig_sym, epsilon, BoundsReport};

/// Per-trial cap on connectivity rejections; a trial that exhausts it marks
/// its cell failed.
pub const MAX_SAMPLE_ATTEMPTS: usize = 50;

/// Calibrated closeness threshold for the rate-comparison claim: mean peak
/// probabilities under the two rates are called "close" when they differ by
/// at most this much.
pub const CLOSENESS_THRESHOLD: f64 = 0.1;

/// Stream salt for drawing the marked vertex (`"mark"` in ASCII), so the
/// vertex draw never perturbs the edge stream.
const MARKED_SALT: u64 = 0x6d61_726b;

/// How the edge probability of each cell is derived from `n`.
#[derive(Debug, Clone)]
pub enum PRule {
    /// The same explicit list of probabilities for every `n`.
    Explicit(Vec<f64>),
    /// One cell per exponent `a`: `p = n^-a`.
    Exponents(Vec<f64>),
    /// Single cell `p = c·ln(n)/n`.
    LogFactor(f64),
}

impl PRule {
    /// Edge probabilities this rule produces for a given `n`.
    pub fn values(&self, n: usize) -> Vec<f64> {
        let nf = n as f64;
        match self {
            PRule::Explicit(ps) => ps.clone(),
            PRule::Exponents(exps) => exps.iter().map(|a| nf.powf(-a)).collect(),
            PRule::LogFactor(c) => vec![c * nf.ln() / nf],
        }
    }
}

/// Choice of marked vertex per trial.
#[derive(Debug, Clone, Copy)]
pub enum MarkedPolicy {
    /// Uniformly random per trial from the seeded stream (the claim under
    /// test is about almost all vertices, so this is the faithful default).
    Random,
    /// Always the given vertex.
    Fixed(usize),
}

/// Full description of a sweep; two equal configs produce byte-identical
/// outputs.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_list: Vec<usize>,
    pub p_rule: PRule,
    pub trials_per_cell: usize,
    pub base_seed: u64,
    /// Rates to compare; subset of `{Exact, Simplified}`.
    pub rate_kinds: Vec<RateKind>,
    pub marked_policy: MarkedPolicy,
    /// Bound constant `C` forwarded to the per-trial [`BoundsReport`].
    pub c: f64,
    /// Points per time grid (scan and series alike).
    pub time_grid_size: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_list: Vec::new(),
            p_rule: PRule::Explicit(Vec::new()),
            trials_per_cell: 10,
            base_seed: 0,
            rate_kinds: vec![RateKind::Exact, RateKind::Simplified],
            marked_policy: MarkedPolicy::Random,
            c: 2.0,
            time_grid_size: 2001,
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() {
            return Err(Error::invalid("n_list must not be empty"));
        }
        if let Some(&n) = self.n_list.iter().find(|&&n| n < 2) {
            return Err(Error::invalid(format!("n = {n} is too small, need n ≥ 2")));
        }
        if self.trials_per_cell == 0 {
            return Err(Error::invalid("trials_per_cell must be ≥ 1"));
        }
        if self.rate_kinds.is_empty() {
            return Err(Error::invalid("rate_kinds must not be empty"));
        }
        if self
            .rate_kinds
            .iter()
            .any(|k| matches!(k, RateKind::Custom(_)))
        {
            return Err(Error::invalid(
                "sweeps compare the exact and simplified rates; custom rates are for single runs",
            ));
        }
        if self.time_grid_size < 2 {
            return Err(Error::invalid("time_grid_size must be ≥ 2"));
        }
        if !(self.c > 0.0) {
            return Err(Error::invalid("bound constant C must be positive"));
        }
        for &n in &self.n_list {
            if let MarkedPolicy::Fixed(w) = self.marked_policy {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            for p in self.p_rule.values(n) {
                if !(p > 0.0 && p <= 1.0) {
                    return Err(Error::InvalidProbability(p));
                }
            }
        }
        Ok(())
    }
}

/// One rate's outcome within a trial.
#[derive(Debug, Clone)]
pub struct RateRun {
    pub rate_kind: RateKind,
    pub gamma: f64,
    pub t_star: f64,
    pub p_max: f64,
    pub series: EvolutionSeries,
}

/// One sampled graph, fully analyzed.
#[derive(Debug, Clone)]
pub struct TrialRecord {
    pub n: usize,
    pub p: f64,
    pub trial: usize,
    /// Seed of the connected sample actually used (after rejections).
    pub seed: u64,
    pub marked: usize,
    /// Disconnected samples discarded before this one.
    pub rejections: usize,
    /// Optimal measurement time under the exact rate; series run on `[0, 2T]`.
    pub t_ref: f64,
    pub bounds: BoundsReport,
    pub runs: Vec<RateRun>,
}

/// Mean/σ of peak probability per rate within one cell.
#[derive(Debug, Clone)]
pub struct CellAggregate {
    pub rate_kind: RateKind,
    pub trials: usize,
    pub mean_pmax: f64,
    /// Sample standard deviation (0 for a single trial).
    pub std_pmax: f64,
    pub mean_tstar: f64,
}

/// How many trials passed each spectral bound.
#[derive(Debug, Clone, Default)]
pub struct BoundPassCounts {
    pub lambda1: usize,
    pub opnorm: usize,
    pub second: usize,
    pub overlap: usize,
    /// The deterministic `|Wᶜ| < βn` inequality; always equals the trial
    /// count.
    pub w_inequality: usize,
}

/// All trials and aggregates of one `(n, p)` cell.
#[derive(Debug, Clone)]
pub struct CellReport {
    pub n: usize,
    pub p: f64,
    /// Index of `p` within the rule's value list — part of the seed path.
    pub p_index: usize,
    /// True when some trial exhausted [`MAX_SAMPLE_ATTEMPTS`]; completed
    /// trials are still reported.
    pub failed: bool,
    pub trials: Vec<TrialRecord>,
    pub aggregates: Vec<CellAggregate>,
    pub bound_pass: BoundPassCounts,
    /// Mean `|W(G)|/n` over trials.
    pub mean_w_fraction: f64,
    /// Total disconnected samples discarded in this cell.
    pub rejections: usize,
}

impl CellReport {
    pub fn aggregate(&self, kind: RateKind) -> Option<&CellAggregate> {
        self.aggregates.iter().find(|a| a.rate_kind == kind)
    }
}

/// Outcome of [`run_sweep`].
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub cells: Vec<CellReport>,
}

/// Exact-vs-simplified contrast for one cell.
#[derive(Debug, Clone)]
pub struct RateComparison {
    pub n: usize,
    pub p: f64,
    pub mean_pmax_exact: f64,
    pub mean_pmax_simplified: f64,
    pub abs_difference: f64,
    /// Within [`CLOSENESS_THRESHOLD`].
    pub close: bool,
}

fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn sample_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64).sqrt()
}

/// Sample one connected graph for a trial, or `None` when the attempt cap
/// is exhausted. Returns `(graph, seed_used, rejections)`.
fn sample_connected(
    base_seed: u64,
    n: usize,
    p: f64,
    p_index: usize,
    trial: usize,
) -> Result<Option<(Graph, u64, usize)>> {
    for attempt in 0..MAX_SAMPLE_ATTEMPTS {
        let seed = derive_seed(
            base_seed,
            &[n as u64, p_index as u64, trial as u64, attempt as u64],
        );
        let g = sample_er(n, p, seed)?;
        if g.is_connected() {
            return Ok(Some((g, seed, attempt)));
        }
    }
    Ok(None)
}

fn draw_marked(policy: MarkedPolicy, graph_seed: u64, n: usize) -> usize {
    match policy {
        MarkedPolicy::Random => {
            SplitMix64::new(derive_seed(graph_seed, &[MARKED_SALT])).below(n as u64) as usize
        }
        MarkedPolicy::Fixed(w) => w,
    }
}

fn run_trial(
    cfg: &SweepConfig,
    n: usize,
    p: f64,
    p_index: usize,
    trial: usize,
) -> Result<Option<TrialRecord>> {
    let Some((graph, seed, rejections)) =
        sample_connected(cfg.base_seed, n, p, p_index, trial)?
    else {
        return Ok(None);
    };
    let marked = draw_marked(cfg.marked_policy, seed, n);

    let gamma_simple = 1.0 / (n as f64 * p);
    let scaled = eig_sym(&(graph.adjacency() * gamma_simple))?;
    let bounds = bound_report_with(&graph, cfg.c, &scaled)?;
    // λ₁(A) = np·λ₁(γ_simple·A), so the exact rate falls out of the same
    // decomposition.
    let gamma_exact = gamma_simple / scaled.eigenvalues[0];

    // Optimal time under the exact rate over the default window [0, 2π√n].
    let setup_exact =
        SearchSetup::with_gamma(graph.clone(), gamma_exact, marked, RateKind::Exact)?;
    let prop_exact = Propagator::for_setup(&setup_exact)?;
    let scan_end = 2.0 * std::f64::consts::PI * (n as f64).sqrt();
    let scan = prop_exact.series(&uniform_grid(scan_end, cfg.time_grid_size))?;
    // Guard against a degenerate argmax at 0 so the series window stays valid.
    let t_ref = scan.t_star.max(scan_end / (cfg.time_grid_size - 1) as f64);

    let series_grid = uniform_grid(2.0 * t_ref, cfg.time_grid_size);
    let mut runs = Vec::with_capacity(cfg.rate_kinds.len());
    for &kind in &cfg.rate_kinds {
        let (gamma, series) = match kind {
            RateKind::Exact => (gamma_exact, prop_exact.series(&series_grid)?),
            RateKind::Simplified => {
                let setup =
                    SearchSetup::with_gamma(graph.clone(), gamma_simple, marked, kind)?;
                (gamma_simple, Propagator::for_setup(&setup)?.series(&series_grid)?)
            }
            RateKind::Custom(_) => unreachable!("rejected by SweepConfig::validate"),
        };
        runs.push(RateRun {
            rate_kind: kind,
            gamma,
            t_star: series.t_star,
            p_max: series.p_max,
            series,
        });
    }
    Ok(Some(TrialRecord {
        n,
        p,
        trial,
        seed,
        marked,
        rejections,
        t_ref,
        bounds,
        runs,
    }))
}

fn assemble_cell(
    cfg: &SweepConfig,
    n: usize,
    p: f64,
    p_index: usize,
    outcomes: Vec<Option<TrialRecord>>,
) -> CellReport {
    let failed = outcomes.iter().any(Option::is_none);
    let trials: Vec<TrialRecord> = outcomes.into_iter().flatten().collect();
    let mut rejections: usize = trials.iter().map(|t| t.rejections).sum();
    if failed {
        // Exhausted trials contributed MAX_SAMPLE_ATTEMPTS rejections each.
        let exhausted = cfg.trials_per_cell - trials.len();
        rejections += exhausted * MAX_SAMPLE_ATTEMPTS;
    }

    let mut aggregates = Vec::new();
    for &kind in &cfg.rate_kinds {
        let pmaxes: Vec<f64> = trials
            .iter()
            .flat_map(|t| t.runs.iter())
            .filter(|r| r.rate_kind == kind)
            .map(|r| r.p_max)
            .collect();
        let tstars: Vec<f64> = trials
            .iter()
            .flat_map(|t| t.runs.iter())
            .filter(|r| r.rate_kind == kind)
            .map(|r| r.t_star)
            .collect();
        aggregates.push(CellAggregate {
            rate_kind: kind,
            trials: pmaxes.len(),
            mean_pmax: mean(&pmaxes),
            std_pmax: sample_std(&pmaxes),
            mean_tstar: mean(&tstars),
        });
    }

    let mut bound_pass = BoundPassCounts::default();
    let mut w_fractions = Vec::with_capacity(trials.len());
    for t in &trials {
        bound_pass.lambda1 += t.bounds.lambda1_bound_ok as usize;
        bound_pass.opnorm += t.bounds.opnorm_ok as usize;
        bound_pass.second += t.bounds.second_ok as usize;
        bound_pass.overlap += t.bounds.overlap_ok as usize;
        let complement = (t.n - t.bounds.w_set_size) as f64;
        let w_ok = t.bounds.beta == 0.0 || complement < t.bounds.beta * t.n as f64;
        bound_pass.w_inequality += w_ok as usize;
        w_fractions.push(t.bounds.w_set_size as f64 / t.n as f64);
    }

    CellReport {
        n,
        p,
        p_index,
        failed,
        mean_w_fraction: mean(&w_fractions),
        trials,
        aggregates,
        bound_pass,
        rejections,
    }
}

/// Run the full sweep. Deterministic given the config; trials execute in
/// parallel but are keyed by derived seeds, so thread count never affects
/// output.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let mut cells = Vec::new();
    for &n in &config.n_list {
        for (p_index, p) in config.p_rule.values(n).into_iter().enumerate() {
            let outcomes: Vec<Option<TrialRecord>> = (0..config.trials_per_cell)
                .into_par_iter()
                .map(|trial| run_trial(config, n, p, p_index, trial))
                .collect::<Result<_>>()?;
            cells.push(assemble_cell(config, n, p, p_index, outcomes));
        }
    }
    Ok(SweepReport {
        config: config.clone(),
        cells,
    })
}

impl SweepReport {
    /// Summary CSV, one row per (cell, rate): columns
    /// `n,p,rate_kind,trials,mean_pmax,std_pmax,mean_tstar,rejections`.
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("n,p,rate_kind,trials,mean_pmax,std_pmax,mean_tstar,rejections\n");
        for cell in &self.cells {
            for agg in &cell.aggregates {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    cell.n,
                    cell.p,
                    agg.rate_kind.label(),
                    agg.trials,
                    agg.mean_pmax,
                    agg.std_pmax,
                    agg.mean_tstar,
                    cell.rejections
                );
            }
        }
        out
    }

    /// Exact-vs-simplified contrast per cell, for cells that ran both rates
    /// and completed at least one trial.
    pub fn comparisons(&self) -> Vec<RateComparison> {
        self.cells
            .iter()
            .filter_map(|cell| {
                let e = cell.aggregate(RateKind::Exact)?;
                let s = cell.aggregate(RateKind::Simplified)?;
                if e.trials == 0 || s.trials == 0 {
                    return None;
                }
                let diff = (e.mean_pmax - s.mean_pmax).abs();
                Some(RateComparison {
                    n: cell.n,
                    p: cell.p,
                    mean_pmax_exact: e.mean_pmax,
                    mean_pmax_simplified: s.mean_pmax,
                    abs_difference: diff,
                    close: diff <= CLOSENESS_THRESHOLD,
                })
            })
            .collect()
    }

    /// Comparison CSV with the closeness threshold recorded in a comment
    /// line; the final column marks the cell with the largest gap.
    pub fn comparison_csv(&self) -> String {
        let comps = self.comparisons();
        let mut out = format!("# closeness_threshold={CLOSENESS_THRESHOLD}\n");
        out.push_str(
            "n,p,mean_pmax_exact,mean_pmax_simplified,abs_difference,close,largest_gap\n",
        );
        let worst = comps
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs_difference.partial_cmp(&b.1.abs_difference).unwrap())
            .map(|(i, _)| i);
        for (i, c) in comps.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.n,
                c.p,
                c.mean_pmax_exact,
                c.mean_pmax_simplified,
                c.abs_difference,
                c.close,
                Some(i) == worst
            );
        }
        out
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::WriteFailed {
        path: path.display().to_string(),
        source: e,
    })
}

/// Write everything needed to render the rate-comparison figure: one series
/// CSV per (cell, trial, rate) with `#` metadata comments, a `records.csv`
/// index, the per-cell `summary.csv`, and `comparison.csv`. Returns the
/// paths written. Outputs are byte-identical across runs of the same
/// config.
pub fn emit_figure1_data(report: &SweepReport, destination: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dest = destination.as_ref();
    std::fs::create_dir_all(dest).map_err(|e| Error::WriteFailed {
        path: dest.display().to_string(),
        source: e,
    })?;
    let mut written = Vec::new();

    let mut records =
        String::from("n,p,trial,seed,marked,rejections,rate_kind,gamma,t_star,p_max,series_file\n");
    for cell in &report.cells {
        for tr in &cell.trials {
            for run in &tr.runs {
                let name = format!(
                    "series_n{}_p{}_trial{}_{}.csv",
                    tr.n,
                    cell.p_index,
                    tr.trial,
                    run.rate_kind.label()
                );
                let path = dest.join(&name);
                let mut contents = format!(
                    "# n={}\n# p={}\n# seed={}\n# rate_kind={}\n# T={}\n",
                    tr.n,
                    tr.p,
                    tr.seed,
                    run.rate_kind.label(),
                    tr.t_ref
                );
                contents.push_str(&run.series.to_csv());
                write_file(&path, &contents)?;
                written.push(path);
                let _ = writeln!(
                    records,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    tr.n,
                    tr.p,
                    tr.trial,
                    tr.seed,
                    tr.marked,
                    tr.rejections,
                    run.rate_kind.label(),
                    run.gamma,
                    run.t_star,
                    run.p_max,
                    name
                );
            }
        }
    }

    for (name, contents) in [
        ("records.csv", records),
        ("summary.csv", report.summary_csv()),
        ("comparison.csv", report.comparison_csv()),
    ] {
        let path = dest.join(name);
        write_file(&path, &contents)?;
        written.push(path);
    }
    Ok(written)
}

/// Grid description for [`aas_statistics`]; these trials do spectral work
/// only (no walk dynamics), so much larger grids are affordable.
#[derive(Debug, Clone)]
pub struct AasConfig {
    pub n_list: Vec<usize>,
    pub p_rule: PRule,
    pub trials: usize,
    /// Bound constant `C`.
    pub c: f64,
    pub base_seed: u64,
}

/// Empirical pass rates of every bound in one cell. Rates are fractions of
/// completed trials in `[0, 1]`.
#[derive(Debug, Clone)]
pub struct AasCell {
    pub n: usize,
    pub p: f64,
    pub epsilon: f64,
    pub trials_completed: usize,
    pub failed: bool,
    pub rejections: usize,
    pub lambda1_rate: f64,
    pub opnorm_rate: f64,
    pub second_rate: f64,
    pub overlap_rate: f64,
    /// Deterministic `|Wᶜ| < βn` check; 1.0 unless something is deeply wrong.
    pub w_rate: f64,
    pub mean_w_fraction: f64,
    /// Largest `lambda1_dev/ε` seen in the cell (the concentration ratio).
    pub max_lambda1_ratio: f64,
}

/// Pass-rate table over a grid.
#[derive(Debug, Clone)]
pub struct AasReport {
    pub cells: Vec<AasCell>,
}

impl AasReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "n,p,epsilon,trials,rejections,failed,lambda1_rate,opnorm_rate,second_rate,\
             overlap_rate,w_rate,mean_w_fraction,max_lambda1_ratio\n",
        );
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                c.n,
                c.p,
                c.epsilon,
                c.trials_completed,
                c.rejections,
                c.failed,
                c.lambda1_rate,
                c.opnorm_rate,
                c.second_rate,
                c.overlap_rate,
                c.w_rate,
                c.mean_w_fraction,
                c.max_lambda1_ratio
            );
        }
        out
    }
}

/// Evaluate every spectral bound on fresh samples across the grid and
/// report per-cell pass rates. Shares the sweep's seed derivation, so a
/// sweep and an `aas` run with equal seeds see identical graphs.
pub fn aas_statistics(config: &AasConfig) -> Result<AasReport> {
    if config.n_list.is_empty() || config.trials == 0 {
        return Err(Error::invalid("need at least one n and one trial"));
    }
    if !(config.c > 0.0) {
        return Err(Error::invalid("bound constant C must be positive"));
    }
    let mut cells = Vec::new();
    for &n in &config.n_list {
        for (p_index, p) in config.p_rule.values(n).into_iter().enumerate() {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidProbability(p));
            }
            let outcomes: Vec<Option<(BoundsReport, usize)>> = (0..config.trials)
                .into_par_iter()
                .map(|trial| -> Result<Option<(BoundsReport, usize)>> {
                    let Some((graph, _seed, rejections)) =
                        sample_connected(config.base_seed, n, p, p_index, trial)?
                    else {
                        return Ok(None);
                    };
                    let gamma_simple = 1.0 / (n as f64 * p);
                    let scaled = eig_sym(&(graph.adjacency() * gamma_simple))?;
                    let bounds = bound_report_with(&graph, config.c, &scaled)?;
                    Ok(Some((bounds, rejections)))
                })
                .collect::<Result<_>>()?;

            let failed = outcomes.iter().any(Option::is_none);
            let completed: Vec<(BoundsReport, usize)> =
                outcomes.into_iter().flatten().collect();
            let mut rejections: usize = completed.iter().map(|(_, r)| r).sum();
            if failed {
                rejections += (config.trials - completed.len()) * MAX_SAMPLE_ATTEMPTS;
            }
            let m = completed.len().max(1) as f64;
            let rate = |f: &dyn Fn(&BoundsReport) -> bool| {
                completed.iter().filter(|(b, _)| f(b)).count() as f64 / m
            };
            cells.push(AasCell {
                n,
                p,
                epsilon: epsilon(n, p),
                trials_completed: completed.len(),
                failed,
                rejections,
                lambda1_rate: rate(&|b| b.lambda1_bound_ok),
                opnorm_rate: rate(&|b| b.opnorm_ok),
                second_rate: rate(&|b| b.second_ok),
                overlap_rate: rate(&|b| b.overlap_ok),
                w_rate: rate(&|b| {
                    b.beta == 0.0
                        || ((b.n - b.w_set_size) as f64) < b.beta * b.n as f64
                }),
                mean_w_fraction: mean(
                    &completed
                        .iter()
                        .map(|(b, _)| b.w_set_size as f64 / b.n as f64)
                        .collect::<Vec<_>>(),
                ),
                max_lambda1_ratio: completed
                    .iter()
                    .map(|(b, _)| b.lambda1_dev / b.epsilon)
                    .fold(0.0, f64::max),
            });
        }
    }
    Ok(AasReport { cells })
}
