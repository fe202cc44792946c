//! Detector sweeps over a control-parameter grid with contiguous-regime
//! region merging.

use crate::error::{ChaosError, Result};
use crate::lyapunov::lyapunov_exponent;
use crate::maps::{iterate, MapKind, MapSpec};
use crate::three_state::{three_state_test, Regime, ThreeStateParams};
use crate::zero_one::{classify, zero_one_test, ZeroOneParams, ZeroOneRegime};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Configuration for one sweep run. All cells share the initial value and
/// series length; each cell iterates a fresh trajectory at its own r.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub kind: MapKind,
    pub r_from: f64,
    pub r_to: f64,
    pub r_step: f64,
    pub x0: f64,
    pub n: usize,
    pub burn_in: usize,
    pub zero_one: ZeroOneParams<f64>,
    pub three_state: ThreeStateParams<f64>,
    pub run_lyapunov: bool,
    pub lyapunov_n: usize,
    pub lyapunov_burn_in: usize,
}

impl SweepConfig {
    pub fn new(kind: MapKind, r_from: f64, r_to: f64, r_step: f64) -> Self {
        SweepConfig {
            kind,
            r_from,
            r_to,
            r_step,
            x0: 0.01,
            n: 5000,
            burn_in: 0,
            zero_one: ZeroOneParams::default(),
            three_state: ThreeStateParams::default(),
            run_lyapunov: false,
            lyapunov_n: 100_000,
            lyapunov_burn_in: 1000,
        }
    }

    /// Grid points from index arithmetic: r_i = r_from + i * r_step.
    pub fn grid(&self) -> Result<Vec<f64>> {
        if !(self.r_step > 0.0) || !(self.r_from <= self.r_to) {
            return Err(ChaosError::invalid("sweep grid requires r_from <= r_to and r_step > 0"));
        }
        let count = ((self.r_to - self.r_from) / self.r_step + 1e-9).floor() as usize + 1;
        Ok((0..count).map(|i| self.r_from + i as f64 * self.r_step).collect())
    }
}

/// Strong/weak grading from the 0-1 growth rate alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChaosGrade {
    Regular,
    Weak,
    Strong,
}

/// Per-r detector outcomes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub r: f64,
    pub k01: f64,
    pub regime01: ZeroOneRegime,
    pub grade01: ChaosGrade,
    pub regime3st: Regime,
    pub mu: f64,
    pub period: Option<usize>,
    pub lambda: Option<f64>,
}

/// Maximal contiguous run of grid cells sharing a three-state regime.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub r_lo: f64,
    pub r_hi: f64,
    pub regime: Regime,
}

/// Sweep output: ordered cells plus merged regions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub cells: Vec<CellResult>,
    pub regions: Vec<Region>,
}

fn grade_of(k: f64, params: &ZeroOneParams<f64>) -> ChaosGrade {
    if k < params.regular_max {
        ChaosGrade::Regular
    } else if k >= params.strong_min {
        ChaosGrade::Strong
    } else {
        ChaosGrade::Weak
    }
}

fn evaluate_cell(config: &SweepConfig, r: f64) -> Result<CellResult> {
    let spec = MapSpec::new(config.kind, r)?;
    let trajectory = iterate(spec, config.x0, config.n, config.burn_in)?;
    let zo = zero_one_test(&trajectory.values, &config.zero_one)?;
    let ts = three_state_test(&trajectory.values, &config.three_state)?;
    let lambda = if config.run_lyapunov {
        Some(lyapunov_exponent(spec, config.x0, config.lyapunov_n, config.lyapunov_burn_in)?.lambda)
    } else {
        None
    };
    Ok(CellResult {
        r,
        k01: zo.k,
        regime01: classify(zo.k, &config.zero_one),
        grade01: grade_of(zo.k, &config.zero_one),
        regime3st: ts.regime,
        mu: ts.mu,
        period: ts.period,
        lambda,
    })
}

/// Merges consecutive cells with equal three-state regime into regions.
/// Region spans concatenate back to the full grid.
pub fn merge_regions(cells: &[CellResult]) -> Vec<Region> {
    let mut regions: Vec<Region> = Vec::new();
    for cell in cells {
        match regions.last_mut() {
            Some(last) if last.regime == cell.regime3st => last.r_hi = cell.r,
            _ => regions.push(Region { r_lo: cell.r, r_hi: cell.r, regime: cell.regime3st }),
        }
    }
    regions
}

/// Evaluates every grid cell (in parallel) and merges regimes. Cells are
/// ordered by r; the report is deterministic for a given config.
pub fn run_sweep(config: &SweepConfig) -> Result<RegionReport> {
    config.zero_one.validate()?;
    let grid = config.grid()?;
    if grid.is_empty() {
        return Err(ChaosError::invalid("empty sweep grid"));
    }
    let cells: Vec<CellResult> = grid
        .par_iter()
        .map(|&r| {
            evaluate_cell(config, r)
                .map_err(|e| ChaosError::SweepCell { r, source: Box::new(e) })
        })
        .collect::<Result<_>>()?;
    let regions = merge_regions(&cells);
    Ok(RegionReport { cells, regions })
}

/// Per-cell strong/weak grades (independent of the three-state regime).
pub fn strong_weak_grading(cells: &[CellResult], params: &ZeroOneParams<f64>) -> Vec<ChaosGrade> {
    cells.iter().map(|c| grade_of(c.k01, params)).collect()
}
