//! Command-line front end.
//!
//! Subcommands mirror the library operations with reproducible defaults
//! (`zero-one` defaults to N = 5000, x0 = 0.01, c = 0.8; `three-state` to
//! N = 5000, n = 50, Q = 100, p = 1). Exit codes: 0 success, 1 domain or
//! I/O error, 2 usage error.

use crate::error::{ChaosError, Result};
use crate::export;
use crate::lyapunov::lyapunov_exponent;
use crate::maps::{bifurcation_scan, iterate, MapKind, MapSpec};
use crate::sweep::{run_sweep, SweepConfig};
use crate::three_state::{three_state_test, Regime, ThreeStateParams};
use crate::zero_one::{zero_one_test, ZeroOneParams, ZeroOneRegime};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliMap {
    Logistic,
    Lts,
    Lss,
    Tss,
}

impl From<CliMap> for MapKind {
    fn from(m: CliMap) -> MapKind {
        match m {
            CliMap::Logistic => MapKind::Logistic,
            CliMap::Lts => MapKind::LogisticTent,
            CliMap::Lss => MapKind::LogisticSine,
            CliMap::Tss => MapKind::TentSine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "chaos1d", version, about = "Trajectories and chaos detection for 1D maps", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Iterate a map and emit the trajectory
    Iterate(IterateArgs),
    /// Sample attractor points over a control-parameter grid
    Bifurcation(BifurcationArgs),
    /// Run the 0-1 test on a map trajectory
    ZeroOne(ZeroOneArgs),
    /// Run the three-state test on a map trajectory
    ThreeState(ThreeStateArgs),
    /// Estimate the largest Lyapunov exponent
    Lyapunov(LyapunovArgs),
    /// Run all detectors across a parameter grid
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct CommonOut {
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Significant digits for numeric output
    #[arg(long, default_value_t = export::DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Debug, Args)]
struct IterateArgs {
    #[arg(long, value_enum)]
    map: CliMap,
    /// Control parameter, in (0, 4]
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 0.01)]
    x0: f64,
    /// Number of recorded iterates
    #[arg(long, default_value_t = 5000)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    burn_in: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Debug, Args)]
struct BifurcationArgs {
    #[arg(long, value_enum)]
    map: CliMap,
    #[arg(long)]
    r_from: f64,
    #[arg(long)]
    r_to: f64,
    #[arg(long, default_value_t = 0.01)]
    r_step: f64,
    #[arg(long, default_value_t = 0.3)]
    x0: f64,
    #[arg(long, default_value_t = 1000)]
    burn_in: usize,
    /// Attractor samples recorded per grid point
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Debug, Args)]
struct ZeroOneArgs {
    #[arg(long, value_enum)]
    map: CliMap,
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 0.01)]
    x0: f64,
    #[arg(long, default_value_t = 5000)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    burn_in: usize,
    /// Phase angle of the translation variables
    #[arg(long, default_value_t = 0.8)]
    c: f64,
    /// Max displacement lag; N/10 when omitted
    #[arg(long)]
    n_cut: Option<usize>,
    #[arg(long, default_value_t = 0.25)]
    regular_max: f64,
    #[arg(long, default_value_t = 0.6)]
    strong_min: f64,
    /// Write the p-q path as CSV (columns n,p,q)
    #[arg(long)]
    pq_out: Option<PathBuf>,
    /// Write the log-log growth data as CSV (columns log_n,log_m)
    #[arg(long)]
    loglog_out: Option<PathBuf>,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Debug, Args)]
struct ThreeStateArgs {
    #[arg(long, value_enum)]
    map: CliMap,
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 0.01)]
    x0: f64,
    /// Series length N
    #[arg(long, default_value_t = 5000)]
    n_total: usize,
    #[arg(long, default_value_t = 0)]
    burn_in: usize,
    /// Window length n
    #[arg(long, default_value_t = 50)]
    window: usize,
    /// Number of windows Q
    #[arg(long, default_value_t = 100)]
    subsets: usize,
    /// Ordinal delay p
    #[arg(long, default_value_t = 1)]
    delay: usize,
    #[arg(long, default_value_t = 0.0)]
    eps_equal: f64,
    #[arg(long, default_value_t = 5e-3)]
    sigma_zero_tol: f64,
    #[arg(long, default_value_t = 2e-3)]
    chaos_mu_min: f64,
    #[arg(long, default_value_t = 0.1)]
    value_match_tol: f64,
    #[arg(long, default_value_t = 200)]
    max_period: usize,
    /// Window lengths probed for the mu-by-scale report
    #[arg(long, value_delimiter = ',', default_values_t = vec![50usize, 100, 200])]
    scales: Vec<usize>,
    /// Write per-window slopes as CSV (columns j,S_j)
    #[arg(long)]
    slopes_out: Option<PathBuf>,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Debug, Args)]
struct LyapunovArgs {
    #[arg(long, value_enum)]
    map: CliMap,
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 0.01)]
    x0: f64,
    #[arg(long, default_value_t = 100_000)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    burn_in: usize,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    map: CliMap,
    #[arg(long)]
    r_from: f64,
    #[arg(long)]
    r_to: f64,
    #[arg(long, default_value_t = 0.1)]
    r_step: f64,
    #[arg(long, default_value_t = 0.01)]
    x0: f64,
    #[arg(long, default_value_t = 5000)]
    n: usize,
    /// Also compute the Lyapunov exponent per cell
    #[arg(long)]
    lyapunov: bool,
    #[arg(long, default_value_t = 100_000)]
    lyapunov_n: usize,
    #[arg(long, default_value_t = 1000)]
    lyapunov_burn_in: usize,
    /// Worker threads for cell evaluation; library default when omitted
    #[arg(long)]
    threads: Option<usize>,
    /// Write the cell table as CSV
    #[arg(long)]
    csv_out: Option<PathBuf>,
    /// Write the full region report as JSON
    #[arg(long)]
    json_out: Option<PathBuf>,
    #[command(flatten)]
    out: CommonOut,
}

/// JSON record for `zero-one` (round-trips through serde).
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroOneRecord {
    pub map: String,
    pub r: f64,
    pub k: f64,
    pub regime_hint: ZeroOneRegime,
    pub fit_points_used: usize,
    pub params: ZeroOneRecordParams,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroOneRecordParams {
    pub n: usize,
    pub x0: f64,
    pub c: f64,
    pub n_cut: usize,
    pub regular_max: f64,
    pub strong_min: f64,
}

/// JSON record for `three-state`.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ThreeStateRecord {
    pub map: String,
    pub r: f64,
    pub mu: f64,
    pub k: f64,
    pub sigma: f64,
    pub regime: Regime,
    pub period: Option<usize>,
    pub mu_by_scale: Vec<f64>,
}

fn check_r(r: f64) -> Result<()> {
    if !(r > 0.0 && r <= 4.0) {
        return Err(ChaosError::ControlParameterOutOfRange(r));
    }
    Ok(())
}

fn emit(out: &CommonOut, content: &str) -> Result<()> {
    match &out.out {
        Some(path) => export::write_atomic(path, content.as_bytes()),
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn emit_to(path: &PathBuf, content: &str) -> Result<()> {
    export::write_atomic(path, content.as_bytes())
}

fn run_command(cmd: Command) -> Result<()> {
    match cmd {
        Command::Iterate(a) => {
            let spec = MapSpec::new(a.map.into(), a.r)?;
            let t = iterate(spec, a.x0, a.n, a.burn_in)?;
            if t.degenerate {
                eprintln!("warning: trajectory is degenerate (all recorded values identical)");
            }
            let content = match a.format {
                OutputFormat::Csv => export::trajectory_csv(&t, a.out.precision),
                OutputFormat::Json => serde_json::to_string_pretty(&t).expect("serialize"),
            };
            emit(&a.out, &content)
        }
        Command::Bifurcation(a) => {
            let data = bifurcation_scan(
                a.map.into(),
                a.r_from,
                a.r_to,
                a.r_step,
                a.x0,
                a.burn_in,
                a.samples,
            )?;
            let content = match a.format {
                OutputFormat::Csv => export::bifurcation_csv(&data, a.out.precision),
                OutputFormat::Json => serde_json::to_string_pretty(&data).expect("serialize"),
            };
            emit(&a.out, &content)
        }
        Command::ZeroOne(a) => {
            let spec = MapSpec::new(a.map.into(), a.r)?;
            let t = iterate(spec, a.x0, a.n, a.burn_in)?;
            let params = ZeroOneParams {
                c: a.c,
                n_cut: a.n_cut,
                regular_max: a.regular_max,
                strong_min: a.strong_min,
            };
            let n_cut = a.n_cut.unwrap_or(a.n / 10).max(1);
            if a.n < 10 * n_cut {
                eprintln!("warning: series length {} below the recommended 10 * n_cut = {}", a.n, 10 * n_cut);
            }
            let res = zero_one_test(&t.values, &params)?;
            if let Some(path) = &a.pq_out {
                emit_to(path, &export::pq_path_csv(&res, a.out.precision))?;
            }
            if let Some(path) = &a.loglog_out {
                emit_to(path, &export::loglog_csv(&res, a.out.precision))?;
            }
            let p = a.out.precision;
            let record = ZeroOneRecord {
                map: MapKind::from(a.map).name().to_string(),
                r: a.r,
                k: export::round_sig(res.k, p),
                regime_hint: res.regime_hint,
                fit_points_used: res.fit_points_used,
                params: ZeroOneRecordParams {
                    n: a.n,
                    x0: a.x0,
                    c: a.c,
                    n_cut,
                    regular_max: a.regular_max,
                    strong_min: a.strong_min,
                },
            };
            emit(&a.out, &serde_json::to_string_pretty(&record).expect("serialize"))
        }
        Command::ThreeState(a) => {
            let spec = MapSpec::new(a.map.into(), a.r)?;
            let t = iterate(spec, a.x0, a.n_total, a.burn_in)?;
            let params = ThreeStateParams {
                n: a.window,
                q: a.subsets,
                delay_p: a.delay,
                eps_equal: a.eps_equal,
                sigma_zero_tol: a.sigma_zero_tol,
                growth_scales: a.scales.clone(),
                chaos_mu_min: a.chaos_mu_min,
                value_match_tol: a.value_match_tol,
                max_period: a.max_period,
            };
            let res = three_state_test(&t.values, &params)?;
            if let Some(path) = &a.slopes_out {
                emit_to(path, &export::slopes_csv(&res, a.out.precision))?;
            }
            let p = a.out.precision;
            let record = ThreeStateRecord {
                map: MapKind::from(a.map).name().to_string(),
                r: a.r,
                mu: export::round_sig(res.mu, p),
                k: export::round_sig(res.k, p),
                sigma: export::round_sig(res.slope_set.sigma, p),
                regime: res.regime,
                period: res.period,
                mu_by_scale: res.mu_by_scale.iter().map(|&m| export::round_sig(m, p)).collect(),
            };
            emit(&a.out, &serde_json::to_string_pretty(&record).expect("serialize"))
        }
        Command::Lyapunov(a) => {
            let spec = MapSpec::new(a.map.into(), a.r)?;
            let res = lyapunov_exponent(spec, a.x0, a.n, a.burn_in)?;
            let mut rounded = res;
            rounded.lambda = export::round_sig(res.lambda, a.out.precision);
            emit(&a.out, &serde_json::to_string_pretty(&rounded).expect("serialize"))
        }
        Command::Sweep(a) => {
            let mut config = SweepConfig::new(a.map.into(), a.r_from, a.r_to, a.r_step);
            config.x0 = a.x0;
            config.n = a.n;
            config.run_lyapunov = a.lyapunov;
            config.lyapunov_n = a.lyapunov_n;
            config.lyapunov_burn_in = a.lyapunov_burn_in;
            for r in [a.r_from, a.r_to] {
                check_r(r)?;
            }
            let report = match a.threads {
                Some(t) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(t)
                        .build()
                        .map_err(|e| ChaosError::invalid(e.to_string()))?;
                    pool.install(|| run_sweep(&config))?
                }
                None => run_sweep(&config)?,
            };
            if let Some(path) = &a.csv_out {
                emit_to(path, &export::sweep_csv(&report, a.out.precision))?;
            }
            if let Some(path) = &a.json_out {
                emit_to(path, &serde_json::to_string_pretty(&report).expect("serialize"))?;
            }
            if a.csv_out.is_none() && a.json_out.is_none() || a.out.out.is_some() {
                emit(&a.out, &serde_json::to_string_pretty(&report).expect("serialize"))?;
            }
            Ok(())
        }
    }
}

/// Parses argv and dispatches. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version as "errors" with exit code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    // r-range violations on the command line are usage errors, not domain errors
    let usage_r = match &cli.command {
        Command::Iterate(a) => vec![a.r],
        Command::ZeroOne(a) => vec![a.r],
        Command::ThreeState(a) => vec![a.r],
        Command::Lyapunov(a) => vec![a.r],
        Command::Bifurcation(a) => vec![a.r_from, a.r_to],
        Command::Sweep(a) => vec![a.r_from, a.r_to],
    };
    for r in usage_r {
        if let Err(e) = check_r(r) {
            eprintln!("error: {e}");
            return 2;
        }
    }
    match run_command(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
