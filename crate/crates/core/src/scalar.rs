//! Scalar abstraction: the numeric kernel is generic over the working
//! float type, with `f64` as the default used by the CLI and wire formats.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar everything is generic over (`f32` or `f64`).
pub trait Real: Float + FloatConst + FromPrimitive + core::fmt::Debug + 'static {}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + core::fmt::Debug + 'static {}

/// Lift an `f64` constant into the working scalar type.
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in the scalar type")
}
