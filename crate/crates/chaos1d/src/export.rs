//! CSV/JSON report emission.
//!
//! CSV files use a comma separator, dot decimal, one header row and LF line
//! endings. Files are written atomically (temp file + rename). Numbers are
//! printed with a configurable count of significant digits (default 6).

use crate::error::{ChaosError, Result};
use crate::maps::{BifurcationData, Trajectory};
use crate::sweep::RegionReport;
use crate::three_state::ThreeStateResult;
use crate::zero_one::ZeroOneResult;
use std::io::Write;
use std::path::Path;

pub const DEFAULT_PRECISION: usize = 6;

/// Formats `v` with `sig` significant digits, using fixed notation for
/// moderate magnitudes and scientific notation otherwise.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sig = sig.max(1);
    let exp = v.abs().log10().floor() as i32;
    if (-4..9).contains(&exp) {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", decimals, v)
    } else {
        format!("{:.*e}", sig - 1, v)
    }
}

/// Rounds `v` to `sig` significant digits (for JSON records, where numbers
/// stay numbers).
pub fn round_sig(v: f64, sig: usize) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let exp = v.abs().log10().floor() as i32;
    let factor = 10f64.powi(sig.max(1) as i32 - 1 - exp);
    (v * factor).round() / factor
}

fn fmt_opt(v: Option<f64>, sig: usize) -> String {
    v.map(|x| fmt_sig(x, sig)).unwrap_or_default()
}

/// Writes bytes to `path` atomically: a sibling temp file is renamed over
/// the target once fully written.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let io_err = |source| ChaosError::Io { path: path.display().to_string(), source };
    let tmp = path.with_extension("tmp~");
    {
        let mut f = std::fs::File::create(&tmp).map_err(io_err)?;
        f.write_all(bytes).map_err(io_err)?;
        f.sync_all().map_err(io_err)?;
    }
    std::fs::rename(&tmp, path).map_err(io_err)
}

pub fn trajectory_csv(t: &Trajectory<f64>, sig: usize) -> String {
    let mut out = String::from("index,value\n");
    for (i, v) in t.values.iter().enumerate() {
        out.push_str(&format!("{i},{}\n", fmt_sig(*v, sig)));
    }
    out
}

pub fn bifurcation_csv(data: &BifurcationData<f64>, sig: usize) -> String {
    let mut out = String::from("r,value\n");
    for (r, points) in data.r_grid.iter().zip(&data.points_per_r) {
        for v in points {
            out.push_str(&format!("{},{}\n", fmt_sig(*r, sig), fmt_sig(*v, sig)));
        }
    }
    out
}

/// p-q path data (Fig.-2 style): columns n, p, q.
pub fn pq_path_csv(result: &ZeroOneResult<f64>, sig: usize) -> String {
    let mut out = String::from("n,p,q\n");
    for (i, (p, q)) in result.path.p.iter().zip(&result.path.q).enumerate() {
        out.push_str(&format!("{},{},{}\n", i + 1, fmt_sig(*p, sig), fmt_sig(*q, sig)));
    }
    out
}

/// Log-log growth data (Fig.-3 style): columns log_n, log_m. Lags with
/// M(n) = 0 are skipped (log undefined).
pub fn loglog_csv(result: &ZeroOneResult<f64>, sig: usize) -> String {
    let mut out = String::from("log_n,log_m\n");
    for (i, m) in result.msd.m.iter().enumerate() {
        if *m > 0.0 {
            let n = (i + 1) as f64;
            out.push_str(&format!("{},{}\n", fmt_sig(n.ln(), sig), fmt_sig(m.ln(), sig)));
        }
    }
    out
}

/// Per-window slope data (Fig.-4 style): columns j, S_j.
pub fn slopes_csv(result: &ThreeStateResult<f64>, sig: usize) -> String {
    let mut out = String::from("j,S_j\n");
    for (j, s) in result.slope_set.slopes.iter().enumerate() {
        out.push_str(&format!("{j},{}\n", fmt_sig(*s, sig)));
    }
    out
}

/// Sweep table: columns r, K01, grade01, regime3st, mu, lambda.
pub fn sweep_csv(report: &RegionReport, sig: usize) -> String {
    let mut out = String::from("r,K01,grade01,regime3st,mu,lambda\n");
    for cell in &report.cells {
        out.push_str(&format!(
            "{},{},{:?},{:?},{},{}\n",
            fmt_sig(cell.r, sig),
            fmt_sig(cell.k01, sig),
            cell.grade01,
            cell.regime3st,
            fmt_sig(cell.mu, sig),
            fmt_opt(cell.lambda, sig),
        ));
    }
    out
}
