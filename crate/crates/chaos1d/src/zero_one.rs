//! The 0-1 test for chaos on a scalar time series.
//!
//! The series is projected onto translation variables (p, q) by phase
//! accumulation at a fixed angle `c`, the mean square displacement of the
//! (p, q) path is computed per lag, and the growth rate `K` is the
//! least-squares slope of `log M(n)` against `log n`. Bounded paths give
//! `K` near 0 (regular dynamics); diffusive paths give `K` near 1 (chaos).
//!
//! The displacement at lag `n` is normalized by the series length `N`
//! (the truncated sum has `N - n` terms), matching the defining formula
//! rather than a per-lag mean.

use crate::error::{ChaosError, Result};
use crate::num::Real;
use serde::{Deserialize, Serialize};

/// Parameters of the 0-1 test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroOneParams<F> {
    /// Phase angle, radians, in (0, 2π).
    pub c: F,
    /// Largest displacement lag; must stay well below the series length.
    /// `None` selects N/10.
    pub n_cut: Option<usize>,
    /// K below this threshold classifies as regular.
    pub regular_max: F,
    /// K at or above this threshold classifies as strong chaos.
    pub strong_min: F,
}

impl<F: Real> Default for ZeroOneParams<F> {
    fn default() -> Self {
        ZeroOneParams {
            c: F::from_f64(0.8).unwrap(),
            n_cut: None,
            regular_max: F::from_f64(0.25).unwrap(),
            strong_min: F::from_f64(0.6).unwrap(),
        }
    }
}

impl<F: Real> ZeroOneParams<F> {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > F::zero() && self.c < F::from_f64(2.0).unwrap() * F::PI()) {
            return Err(ChaosError::invalid("angle c must lie in (0, 2*pi)"));
        }
        if !(self.regular_max >= F::zero()
            && self.regular_max < self.strong_min
            && self.strong_min <= F::one())
        {
            return Err(ChaosError::invalid(
                "thresholds must satisfy 0 <= regular_max < strong_min <= 1",
            ));
        }
        Ok(())
    }
}

/// The accumulated (p, q) translation path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranslationPath<F> {
    pub p: Vec<F>,
    pub q: Vec<F>,
}

/// Mean square displacement per lag, indexed n = 1..=n_cut.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MsdSeries<F> {
    pub m: Vec<F>,
}

/// Regime suggested by the growth rate K alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroOneRegime {
    Regular,
    WeakChaos,
    StrongChaos,
}

/// Full 0-1 test output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroOneResult<F> {
    pub k: F,
    pub msd: MsdSeries<F>,
    pub path: TranslationPath<F>,
    pub regime_hint: ZeroOneRegime,
    pub fit_points_used: usize,
}

/// Projects the series onto translation variables with p(0) = q(0) = 0 and
/// increments `series[k] * cos(c*k)` / `series[k] * sin(c*k)`, k from 0.
/// The returned path holds the N accumulated values (the zero origin is
/// not stored).
pub fn translate<F: Real>(series: &[F], c: F) -> Result<TranslationPath<F>> {
    if series.is_empty() {
        return Err(ChaosError::SeriesTooShort { have: 0, need: 1 });
    }
    let mut p = Vec::with_capacity(series.len());
    let mut q = Vec::with_capacity(series.len());
    let mut pa = F::zero();
    let mut qa = F::zero();
    for (k, &v) in series.iter().enumerate() {
        let angle = c * F::from_usize_(k);
        pa += v * angle.cos();
        qa += v * angle.sin();
        p.push(pa);
        q.push(qa);
    }
    Ok(TranslationPath { p, q })
}

/// M(n) = (1/N) * sum over j of [p(j+n)-p(j)]^2 + [q(j+n)-q(j)]^2,
/// for n = 1..=n_cut.
pub fn mean_square_displacement<F: Real>(
    path: &TranslationPath<F>,
    n_cut: usize,
) -> Result<MsdSeries<F>> {
    let n_len = path.p.len();
    if n_cut >= n_len {
        return Err(ChaosError::invalid(format!(
            "n_cut = {n_cut} must be smaller than the path length {n_len}"
        )));
    }
    let norm = F::from_usize_(n_len);
    let mut m = Vec::with_capacity(n_cut);
    for n in 1..=n_cut {
        let mut acc = F::zero();
        for j in 0..n_len - n {
            let dp = path.p[j + n] - path.p[j];
            let dq = path.q[j + n] - path.q[j];
            acc += dp * dp + dq * dq;
        }
        m.push(acc / norm);
    }
    Ok(MsdSeries { m })
}

/// Least-squares slope of log M(n) vs log n over the lags with M(n) > 0,
/// clamped to [0, 1.2]. Returns (K, points used); fewer than two positive
/// points give K = 0.
pub fn growth_rate<F: Real>(msd: &MsdSeries<F>) -> (F, usize) {
    let pts: Vec<(F, F)> = msd
        .m
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > F::zero())
        .map(|(i, &m)| (F::from_usize_(i + 1).ln(), m.ln()))
        .collect();
    if pts.len() < 2 {
        return (F::zero(), pts.len());
    }
    let n = F::from_usize_(pts.len());
    let mean_x = pts.iter().fold(F::zero(), |a, &(x, _)| a + x) / n;
    let mean_y = pts.iter().fold(F::zero(), |a, &(_, y)| a + y) / n;
    let mut sxy = F::zero();
    let mut sxx = F::zero();
    for &(x, y) in &pts {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    let slope = sxy / sxx;
    let clamped = slope.max(F::zero()).min(F::from_f64(1.2).unwrap());
    (clamped, pts.len())
}

pub fn classify<F: Real>(k: F, params: &ZeroOneParams<F>) -> ZeroOneRegime {
    if k < params.regular_max {
        ZeroOneRegime::Regular
    } else if k >= params.strong_min {
        ZeroOneRegime::StrongChaos
    } else {
        ZeroOneRegime::WeakChaos
    }
}

/// Runs the full 0-1 test: translate, mean square displacement, growth rate,
/// regime classification.
pub fn zero_one_test<F: Real>(series: &[F], params: &ZeroOneParams<F>) -> Result<ZeroOneResult<F>> {
    params.validate()?;
    let n_cut = params.n_cut.unwrap_or(series.len() / 10).max(1);
    if series.len() < 2 {
        return Err(ChaosError::SeriesTooShort { have: series.len(), need: 2 });
    }
    let path = translate(series, params.c)?;
    let msd = mean_square_displacement(&path, n_cut)?;
    let (k, fit_points_used) = growth_rate(&msd);
    let regime_hint = classify(k, params);
    Ok(ZeroOneResult { k, msd, path, regime_hint, fit_points_used })
}
