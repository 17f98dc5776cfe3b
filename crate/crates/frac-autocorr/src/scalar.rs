//! Scalar abstraction shared by the generic kernels, plus the named
//! constants used everywhere else.

use std::fmt::Debug;
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

use crate::dd::DoubleDouble;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// log 2π.
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;
/// log 2π − γ, the value of A(1).
pub const LN_2PI_MINUS_GAMMA: f64 = LN_2PI - EULER_GAMMA;
pub const PI: f64 = std::f64::consts::PI;

/// Floating-point scalar usable by the generic kernels.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Sum + Send + Sync + 'static {
    fn euler_gamma() -> Self;
    fn ln_2pi() -> Self;

    fn from_i(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }

    /// `num/den` rounded once in the target type.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i(num) / Self::from_i(den)
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {
    fn euler_gamma() -> Self {
        EULER_GAMMA as f32
    }
    fn ln_2pi() -> Self {
        LN_2PI as f32
    }
}

impl Real for f64 {
    fn euler_gamma() -> Self {
        EULER_GAMMA
    }
    fn ln_2pi() -> Self {
        LN_2PI
    }
}

impl Real for DoubleDouble {
    fn euler_gamma() -> Self {
        DoubleDouble::EULER_GAMMA
    }
    fn ln_2pi() -> Self {
        DoubleDouble::LN_2PI
    }
    fn ratio(num: i64, den: i64) -> Self {
        DoubleDouble::from_ratio(num as i128, den as i128)
    }
}
