//! The four 1D maps (logistic, LTS, LSS, TSS) and trajectory generation.
//!
//! All maps act on `[0, 1)` with a control parameter `r` in `(0, 4]`. The
//! combined maps fold their output back into `[0, 1)` with a mod-1
//! reduction; a result of exactly `1.0` is reduced to `0.0` so the state
//! invariant is preserved.

use crate::error::{ChaosError, Result};
use crate::num::Real;
use serde::{Deserialize, Serialize};

/// Which map family to iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Logistic,
    /// Logistic-Tent system.
    LogisticTent,
    /// Logistic-Sine system.
    LogisticSine,
    /// Tent-Sine system.
    TentSine,
}

impl MapKind {
    pub const ALL: [MapKind; 4] = [
        MapKind::Logistic,
        MapKind::LogisticTent,
        MapKind::LogisticSine,
        MapKind::TentSine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Logistic => "logistic",
            MapKind::LogisticTent => "lts",
            MapKind::LogisticSine => "lss",
            MapKind::TentSine => "tss",
        }
    }
}

/// A map family together with its control parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapSpec<F> {
    pub kind: MapKind,
    pub r: F,
}

impl<F: Real> MapSpec<F> {
    pub fn new(kind: MapKind, r: F) -> Result<Self> {
        if !(r > F::zero() && r <= F::from_usize_(4)) || !r.is_finite() {
            return Err(ChaosError::ControlParameterOutOfRange(r.to_f64_lossy()));
        }
        Ok(MapSpec { kind, r })
    }
}

/// A recorded orbit of one map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory<F> {
    pub x0: F,
    pub burn_in: usize,
    pub values: Vec<F>,
    /// Set when every recorded value is identical (e.g. a fixed point was
    /// hit). Detectors still accept such series and report them as regular.
    pub degenerate: bool,
}

/// Attractor samples per control-parameter grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BifurcationData<F> {
    pub r_grid: Vec<F>,
    pub points_per_r: Vec<Vec<F>>,
}

fn mod1<F: Real>(y: F) -> F {
    let y = y - y.floor();
    // floor can round a value infinitesimally below an integer back to 1.0
    if y >= F::one() {
        F::zero()
    } else {
        y
    }
}

/// One application of the selected map.
///
/// Branching for LTS/TSS compares the current iterate against 0.5; the
/// value 0.5 itself takes the upper branch.
pub fn step<F: Real>(spec: MapSpec<F>, x: F) -> Result<F> {
    if !(x >= F::zero() && x < F::one()) {
        return Err(ChaosError::StateOutOfRange(x.to_f64_lossy()));
    }
    let r = spec.r;
    let four = F::from_usize_(4);
    let half = F::from_f64(0.5).unwrap();
    let logistic = r * x * (F::one() - x);
    let y = match spec.kind {
        MapKind::Logistic => logistic,
        MapKind::LogisticTent => {
            let tent = if x < half { x * half } else { (F::one() - x) * half };
            logistic + (four - r) * tent
        }
        MapKind::LogisticSine => logistic + (four - r) * (F::PI() * x).sin() / four,
        MapKind::TentSine => {
            let tent = if x < half { x * half } else { (F::one() - x) * half };
            r * tent + (four - r) * (F::PI() * x).sin() / four
        }
    };
    Ok(mod1(y))
}

/// Iterates the map `burn_in + n` times from `x0`, recording the last `n`
/// iterates. An initial value of exactly 1.0 is reduced to 0.0 first.
pub fn iterate<F: Real>(spec: MapSpec<F>, x0: F, n: usize, burn_in: usize) -> Result<Trajectory<F>> {
    if n == 0 {
        return Err(ChaosError::invalid("trajectory length must be at least 1"));
    }
    if !(x0 >= F::zero() && x0 <= F::one()) {
        return Err(ChaosError::StateOutOfRange(x0.to_f64_lossy()));
    }
    let mut x = if x0 == F::one() { F::zero() } else { x0 };
    for _ in 0..burn_in {
        x = step(spec, x)?;
    }
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        x = step(spec, x)?;
        values.push(x);
    }
    let degenerate = values.iter().all(|&v| v == values[0]);
    Ok(Trajectory { x0, burn_in, values, degenerate })
}

/// Samples attractor points over a control-parameter grid (Fig.-1-style data).
pub fn bifurcation_scan<F: Real>(
    kind: MapKind,
    r_from: F,
    r_to: F,
    r_step: F,
    x0: F,
    burn_in: usize,
    samples: usize,
) -> Result<BifurcationData<F>> {
    if !(r_from > F::zero() && r_from <= r_to && r_to <= F::from_usize_(4)) {
        return Err(ChaosError::invalid(format!(
            "bifurcation grid must satisfy 0 < r_from <= r_to <= 4, got [{}, {}]",
            r_from, r_to
        )));
    }
    if r_step <= F::zero() {
        return Err(ChaosError::invalid("r_step must be positive"));
    }
    if samples == 0 {
        return Err(ChaosError::invalid("samples must be at least 1"));
    }
    let count = ((r_to - r_from) / r_step + F::from_f64(1e-9).unwrap())
        .floor()
        .to_usize()
        .unwrap_or(0)
        + 1;
    let mut r_grid = Vec::with_capacity(count);
    let mut points_per_r = Vec::with_capacity(count);
    for i in 0..count {
        let r = r_from + F::from_usize_(i) * r_step;
        let spec = MapSpec::new(kind, r)?;
        let t = iterate(spec, x0, samples, burn_in)?;
        r_grid.push(r);
        points_per_r.push(t.values);
    }
    Ok(BifurcationData { r_grid, points_per_r })
}

/// Clusters trajectory values into distinct attractor points: a value joins
/// the first cluster whose representative is within `tol`, otherwise it
/// starts a new cluster.
pub fn attractor_points<F: Real>(values: &[F], tol: F) -> Result<Vec<F>> {
    if tol <= F::zero() {
        return Err(ChaosError::invalid("tolerance must be positive"));
    }
    let mut reps: Vec<F> = Vec::new();
    for &v in values {
        if !reps.iter().any(|&rep| (v - rep).abs() <= tol) {
            reps.push(v);
        }
    }
    Ok(reps)
}
