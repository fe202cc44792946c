//! Scalar abstraction for the numerical core.
//!
//! Everything downstream of the map iteration is written against [`Real`]
//! so the same code runs in `f32` or `f64`. The crate-level aliases pin
//! `f64` as the default precision.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable by the maps and detectors.
pub trait Real: Float + FloatConst + FromPrimitive + NumAssign + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static {
    /// Lossy conversion to `f64` for reporting and serialization.
    fn to_f64_lossy(self) -> f64;

    fn from_usize_(v: usize) -> Self {
        Self::from_usize(v).expect("usize fits in scalar")
    }
}

impl Real for f32 {
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn to_f64_lossy(self) -> f64 {
        self
    }
}
