//! Chaos detection for one-dimensional maps.
//!
//! Generates trajectories of the logistic map and the combined
//! Logistic-Tent (LTS), Logistic-Sine (LSS) and Tent-Sine (TSS) systems,
//! and classifies their dynamics per control-parameter value with three
//! detectors:
//!
//! - the 0-1 test ([`zero_one`]): growth rate K of the mean square
//!   displacement of the translation variables (p, q);
//! - the three-state test ([`three_state`]): periodic / quasi-periodic /
//!   chaotic classification from windowed slopes of an ordinal-change
//!   counter, plus period estimation;
//! - a largest-Lyapunov-exponent baseline ([`lyapunov`]).
//!
//! [`sweep`] runs the detectors over a parameter grid and merges
//! contiguous regimes into regions; [`cli`] exposes everything as
//! subcommands with CSV/JSON export.
//!
//! The numerical core is generic over the scalar type through
//! [`num::Real`]; the [`Scalar`] alias pins the default `f64` precision
//! used by the CLI and the sweep layer.

pub mod cli;
pub mod error;
pub mod export;
pub mod lyapunov;
pub mod maps;
pub mod num;
pub mod sweep;
pub mod three_state;
pub mod zero_one;

pub use error::{ChaosError, Result};
pub use maps::{MapKind, MapSpec, Trajectory};
pub use sweep::{RegionReport, SweepConfig};
pub use three_state::{Regime, ThreeStateParams, ThreeStateResult};
pub use zero_one::{ZeroOneParams, ZeroOneResult};

/// Default scalar type for the concrete (CLI / sweep) layer.
pub type Scalar = f64;

/// [`MapSpec`] at the default precision.
pub type MapSpec64 = MapSpec<Scalar>;
/// [`Trajectory`] at the default precision.
pub type Trajectory64 = Trajectory<Scalar>;
