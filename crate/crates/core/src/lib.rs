//! Truncated complex power series, q-difference operators, and the
//! coefficient-class machinery for planar harmonic mappings of the unit
//! disc, together with a grid-based numerical verification engine for
//! the sharp coefficient, distortion, and covering bounds the classes
//! carry.
//!
//! The numeric kernel is generic over the working scalar through
//! [`Real`]; the `*64` aliases below fix the `f64` instantiations used
//! by the CLI and the wire formats.

pub mod bounds;
pub mod classes;
pub mod error;
pub mod json;
pub mod qcore;
pub mod scalar;
pub mod series;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;

pub type QParam64 = qcore::QParam<f64>;
pub type QParam32 = qcore::QParam<f32>;
pub type ClassParams64 = qcore::ClassParams<f64>;
pub type ClassParams32 = qcore::ClassParams<f32>;

pub type AnalyticSeries64 = series::AnalyticSeries<f64>;
pub type AnalyticSeries32 = series::AnalyticSeries<f32>;
pub type HarmonicSeries64 = series::HarmonicSeries<f64>;
pub type HarmonicSeries32 = series::HarmonicSeries<f32>;
pub type GridSpec64 = series::GridSpec<f64>;

pub type MembershipReport64 = classes::MembershipReport<f64>;
pub type VerificationReport64 = verify::VerificationReport<f64>;
pub type DistortionBound64 = bounds::DistortionBound<f64>;
