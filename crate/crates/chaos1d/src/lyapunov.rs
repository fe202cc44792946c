//! Largest-Lyapunov-exponent baseline for the four maps.
//!
//! Uses the analytic per-branch derivative of each map; the mod-1 fold is
//! the identity almost everywhere, so its derivative is taken as 1, and at
//! the branch point x = 0.5 the upper-branch derivative applies. Iterates
//! with derivative exactly zero are excluded from the average and counted;
//! more than 1% exclusions flags the result unreliable.

use crate::error::Result;
use crate::maps::{step, MapKind, MapSpec};
use crate::num::Real;
use serde::{Deserialize, Serialize};

/// Lyapunov estimate in nats per iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LyapunovResult<F> {
    pub lambda: F,
    pub n_used: usize,
    pub burn_in: usize,
    pub excluded: usize,
    pub unreliable: bool,
}

/// d(step)/dx of the branch selected at `x`.
pub fn map_derivative<F: Real>(spec: MapSpec<F>, x: F) -> F {
    let r = spec.r;
    let four = F::from_usize_(4);
    let half = F::from_f64(0.5).unwrap();
    let two = F::from_usize_(2);
    let logistic = r * (F::one() - two * x);
    match spec.kind {
        MapKind::Logistic => logistic,
        MapKind::LogisticTent => {
            let tent = if x < half { half } else { -half };
            logistic + (four - r) * tent
        }
        MapKind::LogisticSine => logistic + (four - r) * F::PI() * (F::PI() * x).cos() / four,
        MapKind::TentSine => {
            let tent = if x < half { r * half } else { -(r * half) };
            tent + (four - r) * F::PI() * (F::PI() * x).cos() / four
        }
    }
}

/// lambda = (1/N) * sum of ln |f'(x_k)| over the post-burn-in orbit,
/// averaging over the iterates whose derivative is nonzero.
pub fn lyapunov_exponent<F: Real>(
    spec: MapSpec<F>,
    x0: F,
    n: usize,
    burn_in: usize,
) -> Result<LyapunovResult<F>> {
    let mut x = if x0 == F::one() { F::zero() } else { x0 };
    for _ in 0..burn_in {
        x = step(spec, x)?;
    }
    let mut acc = F::zero();
    let mut excluded = 0usize;
    for _ in 0..n {
        let d = map_derivative(spec, x).abs();
        if d == F::zero() {
            excluded += 1;
        } else {
            acc += d.ln();
        }
        x = step(spec, x)?;
    }
    let used = n - excluded;
    let lambda = if used == 0 { F::neg_infinity() } else { acc / F::from_usize_(used) };
    Ok(LyapunovResult {
        lambda,
        n_used: used,
        burn_in,
        excluded,
        unreliable: excluded * 100 > n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: MapKind, r: f64) -> MapSpec<f64> {
        MapSpec::new(kind, r).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(map_derivative(spec(MapKind::Logistic, 4.0), 0.25), 2.0);
        assert!((map_derivative(spec(MapKind::Logistic, 2.5), 0.6) - (-0.5)).abs() < 1e-12);
        // sine coefficient vanishes at r = 4
        assert!((map_derivative(spec(MapKind::LogisticSine, 4.0), 0.3) - 1.6).abs() < 1e-12);
    }

    #[test]
    fn logistic_r4_gives_ln2() {
        let res = lyapunov_exponent(spec(MapKind::Logistic, 4.0), 0.3, 100_000, 1000).unwrap();
        assert!((res.lambda - std::f64::consts::LN_2).abs() < 0.01, "lambda = {}", res.lambda);
        assert!(!res.unreliable);
    }

    #[test]
    fn logistic_r2_5_contracts_at_fixed_point() {
        let res = lyapunov_exponent(spec(MapKind::Logistic, 2.5), 0.3, 100_000, 1000).unwrap();
        assert!((res.lambda + std::f64::consts::LN_2).abs() < 0.01, "lambda = {}", res.lambda);
    }

    #[test]
    fn lts_positive_at_r_3_5() {
        let res = lyapunov_exponent(spec(MapKind::LogisticTent, 3.5), 0.01, 100_000, 1000).unwrap();
        assert!(res.lambda > 0.0);
    }

    #[test]
    fn burn_in_independence() {
        let s = spec(MapKind::Logistic, 3.95);
        let a = lyapunov_exponent(s, 0.3, 100_000, 1000).unwrap();
        let b = lyapunov_exponent(s, 0.3, 100_000, 10_000).unwrap();
        assert!((a.lambda - b.lambda).abs() < 0.02);
    }

    #[test]
    fn sign_agrees_with_three_state_on_logistic() {
        let periodic = lyapunov_exponent(spec(MapKind::Logistic, 3.15), 0.01, 20_000, 1000).unwrap();
        assert!(periodic.lambda < 0.0);
        for r in [3.75, 3.95] {
            let chaotic = lyapunov_exponent(spec(MapKind::Logistic, r), 0.01, 20_000, 1000).unwrap();
            assert!(chaotic.lambda > 0.0, "lambda({r}) = {}", chaotic.lambda);
        }
    }
}
