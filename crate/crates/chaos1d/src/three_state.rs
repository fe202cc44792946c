//! Three-state test: ordinal-pattern classification into periodic,
//! quasi-periodic and chaotic dynamics, with period estimation.
//!
//! The series is symbolized by comparing each value against the value
//! `delay_p` steps later. The cumulative count of symbol changes forms a
//! staircase; its regression slope over `Q` non-overlapping windows of
//! length `n` gives the slope set `S_j`. The spread `sigma_S` of the
//! slopes drives the growth indicator `mu = log(1 + sigma_S) / log N`.
//!
//! Classification: a series is periodic when the slopes are (near)
//! constant, the symbol sequence repeats exactly over its trailing part,
//! and the raw values confirm the recurrence; it is chaotic when `mu`
//! stays above a floor at the base window length; otherwise it is
//! quasi-periodic (the slope statistics saturate without an exact
//! recurrence).

use crate::error::{ChaosError, Result};
use crate::num::Real;
use serde::{Deserialize, Serialize};

/// Parameters of the three-state test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreeStateParams<F> {
    /// Window length n (smallest observation duration).
    pub n: usize,
    /// Number of windows Q at the base scale.
    pub q: usize,
    /// Ordinal comparison delay.
    pub delay_p: usize,
    /// Equality tolerance for symbolization.
    pub eps_equal: F,
    /// sigma_S at or below this counts as a constant slope set.
    pub sigma_zero_tol: F,
    /// Window lengths probed for `mu_by_scale`; first entry must equal `n`.
    pub growth_scales: Vec<usize>,
    /// mu at the base scale above this floor classifies as chaotic.
    pub chaos_mu_min: F,
    /// Max |x(i) - x(i+T)| over the series tail for a period to count as
    /// confirmed.
    pub value_match_tol: F,
    /// Largest period searched.
    pub max_period: usize,
}

impl<F: Real> Default for ThreeStateParams<F> {
    fn default() -> Self {
        ThreeStateParams {
            n: 50,
            q: 100,
            delay_p: 1,
            eps_equal: F::zero(),
            sigma_zero_tol: F::from_f64(5e-3).unwrap(),
            growth_scales: vec![50, 100, 200],
            chaos_mu_min: F::from_f64(2e-3).unwrap(),
            value_match_tol: F::from_f64(0.1).unwrap(),
            max_period: 200,
        }
    }
}

impl<F: Real> ThreeStateParams<F> {
    pub fn validate(&self, series_len: usize) -> Result<()> {
        if self.n == 0 || self.q == 0 || self.delay_p == 0 {
            return Err(ChaosError::invalid("n, Q and delay must be positive"));
        }
        if self.n >= series_len {
            return Err(ChaosError::invalid("window length n must satisfy n < N"));
        }
        if self.n * self.q > series_len {
            return Err(ChaosError::SeriesTooShort { have: series_len, need: self.n * self.q });
        }
        if self.eps_equal < F::zero() || self.sigma_zero_tol <= F::zero() {
            return Err(ChaosError::invalid("eps_equal must be >= 0 and sigma_zero_tol > 0"));
        }
        if self.growth_scales.first() != Some(&self.n)
            || !self.growth_scales.windows(2).all(|w| w[0] < w[1])
        {
            return Err(ChaosError::invalid(
                "growth_scales must be strictly increasing and start at n",
            ));
        }
        Ok(())
    }
}

/// Ordinal symbols over {-1, 0, +1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolSequence {
    pub symbols: Vec<i8>,
}

/// Window regression slopes with their mean and population spread.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlopeSet<F> {
    pub slopes: Vec<F>,
    pub mean: F,
    pub sigma: F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Periodic,
    QuasiPeriodic,
    Chaotic,
}

/// Full three-state test output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreeStateResult<F> {
    pub slope_set: SlopeSet<F>,
    pub mu: F,
    /// Finite-N stand-in for the limiting indicator; equals `mu` at the
    /// base window length.
    pub k: F,
    pub regime: Regime,
    pub period: Option<usize>,
    pub mu_by_scale: Vec<F>,
}

/// Symbolizes the series: +1 where x(i+p) exceeds x(i) by more than
/// `eps_equal`, -1 where it falls short by more than `eps_equal`, 0 otherwise.
pub fn symbolize<F: Real>(series: &[F], delay_p: usize, eps_equal: F) -> Result<SymbolSequence> {
    if series.len() <= delay_p {
        return Err(ChaosError::SeriesTooShort { have: series.len(), need: delay_p + 1 });
    }
    let symbols = series
        .windows(delay_p + 1)
        .map(|w| {
            let (a, b) = (w[0], w[delay_p]);
            if b > a + eps_equal {
                1
            } else if b < a - eps_equal {
                -1
            } else {
                0
            }
        })
        .collect();
    Ok(SymbolSequence { symbols })
}

/// Cumulative count of symbol changes: C(k) = #{ i <= k : s(i) != s(i-1) }.
pub fn change_cumulative(sym: &SymbolSequence) -> Result<Vec<u32>> {
    if sym.symbols.len() < 2 {
        return Err(ChaosError::SeriesTooShort { have: sym.symbols.len(), need: 2 });
    }
    let mut count = 0u32;
    Ok(sym
        .symbols
        .windows(2)
        .map(|w| {
            if w[1] != w[0] {
                count += 1;
            }
            count
        })
        .collect())
}

/// Regression slope of `C` over each of `q` consecutive non-overlapping
/// windows of length `n`, with the population standard deviation of the
/// slopes. A set of bitwise-equal slopes reports sigma exactly 0.
pub fn window_slopes<F: Real>(c: &[u32], n: usize, q: usize) -> Result<SlopeSet<F>> {
    if n < 2 || q == 0 || n * q > c.len() {
        return Err(ChaosError::invalid(format!(
            "need {q} windows of length {n} but the change series has {} entries",
            c.len()
        )));
    }
    // centered abscissa: slope = sum(t_i * y_i) / sum(t_i^2)
    let t_mean = F::from_usize_(n - 1) / F::from_usize_(2);
    let mut t_sq = F::zero();
    for i in 0..n {
        let t = F::from_usize_(i) - t_mean;
        t_sq += t * t;
    }
    let mut slopes = Vec::with_capacity(q);
    for j in 0..q {
        let w = &c[j * n..(j + 1) * n];
        // Drop the window's starting count in integer space: the slope is
        // offset-invariant, and windows with identical change patterns then
        // produce bit-identical slopes.
        let base = w[0];
        let y_mean = w.iter().fold(F::zero(), |a, &y| a + F::from_u32(y - base).unwrap())
            / F::from_usize_(n);
        let mut num = F::zero();
        for (i, &y) in w.iter().enumerate() {
            let t = F::from_usize_(i) - t_mean;
            num += t * (F::from_u32(y - base).unwrap() - y_mean);
        }
        slopes.push(num / t_sq);
    }
    let mean = slopes.iter().fold(F::zero(), |a, &s| a + s) / F::from_usize_(q);
    let sigma = if slopes.iter().all(|&s| s == slopes[0]) {
        F::zero()
    } else {
        let var = slopes
            .iter()
            .fold(F::zero(), |a, &s| a + (s - mean) * (s - mean))
            / F::from_usize_(q);
        var.sqrt()
    };
    Ok(SlopeSet { slopes, mean, sigma })
}

/// mu = log(1 + sigma_S) / log N.
pub fn growth_indicator<F: Real>(slope_set: &SlopeSet<F>, series_len: usize) -> F {
    (F::one() + slope_set.sigma).ln() / F::from_usize_(series_len).ln()
}

/// Smallest T <= max_period such that the trailing 80% of the symbol
/// sequence repeats with period T.
pub fn estimate_period(sym: &SymbolSequence, max_period: usize) -> Option<usize> {
    let len = sym.symbols.len();
    let tail = &sym.symbols[len / 5..];
    (1..=max_period.min(tail.len().saturating_sub(1)))
        .find(|&t| tail[t..].iter().zip(&tail[..tail.len() - t]).all(|(a, b)| a == b))
}

/// Largest |x(i) - x(i+t)| over the trailing 80% of the series.
fn period_residual<F: Real>(series: &[F], t: usize) -> F {
    let tail = &series[series.len() / 5..];
    if t >= tail.len() {
        return F::infinity();
    }
    tail.iter()
        .zip(&tail[t..])
        .fold(F::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
}

/// Smallest period whose recurrence the raw values confirm within
/// `value_match_tol`, searched up to `max_period`.
fn confirmed_value_period<F: Real>(series: &[F], params: &ThreeStateParams<F>) -> Option<usize> {
    let tail_len = series.len() - series.len() / 5;
    (1..=params.max_period.min(tail_len.saturating_sub(1)))
        .find(|&t| period_residual(series, t) <= params.value_match_tol)
}

/// Runs the full three-state test.
pub fn three_state_test<F: Real>(
    series: &[F],
    params: &ThreeStateParams<F>,
) -> Result<ThreeStateResult<F>> {
    params.validate(series.len())?;
    let n_total = series.len();
    let sym = symbolize(series, params.delay_p, params.eps_equal)?;
    let changes = change_cumulative(&sym)?;

    // The change series is delay_p + 1 shorter than the input, so the last
    // partial window is dropped (Q = 100, n = 50 over N = 5000 yields 99
    // usable windows).
    let q_base = params.q.min(changes.len() / params.n);
    if q_base < 2 {
        return Err(ChaosError::SeriesTooShort { have: changes.len(), need: 2 * params.n });
    }
    let slope_set = window_slopes::<F>(&changes, params.n, q_base)?;
    let mu = growth_indicator(&slope_set, n_total);

    let mut mu_by_scale = Vec::with_capacity(params.growth_scales.len());
    for &scale in &params.growth_scales {
        let q = changes.len() / scale;
        if q < 2 {
            return Err(ChaosError::invalid(format!(
                "growth scale {scale} leaves fewer than 2 windows"
            )));
        }
        let s = window_slopes::<F>(&changes, scale, q)?;
        mu_by_scale.push(growth_indicator(&s, n_total));
    }

    let symbol_period = estimate_period(&sym, params.max_period);
    let periodic = slope_set.sigma <= params.sigma_zero_tol
        && symbol_period
            .map(|t| period_residual(series, t) <= params.value_match_tol)
            .unwrap_or(false);

    let (regime, period) = if periodic {
        (Regime::Periodic, confirmed_value_period(series, params).or(symbol_period))
    } else if mu > params.chaos_mu_min {
        (Regime::Chaotic, None)
    } else {
        (Regime::QuasiPeriodic, None)
    };

    Ok(ThreeStateResult { mu, k: mu, slope_set, regime, period, mu_by_scale })
}
