//! Closed-form distortion envelope and covering radius for the
//! restricted family, with their dependence on the leading co-analytic
//! coefficient b1.
//!
//! The b1 term inside the bracket divides by `[2]_q - alpha` in the
//! primary formulas. A variant that divides by `[2]_q + alpha` instead
//! (the form the analogous classical bounds suggest) is available so
//! the two can be compared numerically; the verification engine emits
//! that comparison.

use crate::error::{Error, Result};
use crate::qcore::ClassParams;
use crate::scalar::Real;
use serde::{Deserialize, Serialize};

/// Which denominator the b1 term of the distortion bracket uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum B1Factor {
    /// `(1+alpha)/([2]_q - alpha)`, the primary form.
    Printed,
    /// `(1+alpha)/([2]_q + alpha)`, the side-by-side alternate.
    Variant,
}

/// Two-sided envelope for |f(z)| on |z| = r.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistortionBound<T> {
    pub r: T,
    pub lower: T,
    pub upper: T,
    pub b1: T,
    /// Set when the lower bound came out negative; it is reported
    /// unclamped and carries no information there.
    pub lower_vacuous: bool,
}

fn validate_b1<T: Real>(b1: T) -> Result<()> {
    if b1 < T::zero() || b1 >= T::one() {
        return Err(Error::B1OutOfRange(b1.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

fn validate_radius<T: Real>(r: T) -> Result<()> {
    if r <= T::zero() || r >= T::one() {
        return Err(Error::RadiusOutOfRange(r.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// The r^2 coefficient of the distortion envelope:
/// `(1/[2]^m) ((1-alpha)/([2]-alpha) - factor * b1)`.
pub fn distortion_bracket<T: Real>(p: &ClassParams<T>, b1: T, factor: B1Factor) -> T {
    let two = crate::qcore::q_bracket(2, p.q);
    let pow = p.bracket_pow(2);
    let b1_denom = match factor {
        B1Factor::Printed => two - p.alpha,
        B1Factor::Variant => two + p.alpha,
    };
    ((T::one() - p.alpha) / (two - p.alpha) - (T::one() + p.alpha) / b1_denom * b1) / pow
}

/// Distortion envelope with the chosen b1 factor:
/// `(1 -+ b1) r -+ bracket * r^2`.
pub fn distortion_bounds_with<T: Real>(
    p: &ClassParams<T>,
    b1: T,
    r: T,
    factor: B1Factor,
) -> Result<DistortionBound<T>> {
    validate_b1(b1)?;
    validate_radius(r)?;
    let bracket = distortion_bracket(p, b1, factor);
    let upper = (T::one() + b1) * r + bracket * r * r;
    let lower = (T::one() - b1) * r - bracket * r * r;
    Ok(DistortionBound {
        r,
        lower,
        upper,
        b1,
        lower_vacuous: lower < T::zero(),
    })
}

/// Distortion envelope in the primary form.
pub fn distortion_bounds<T: Real>(p: &ClassParams<T>, b1: T, r: T) -> Result<DistortionBound<T>> {
    distortion_bounds_with(p, b1, r, B1Factor::Printed)
}

/// Radius of the disc about the origin guaranteed inside the image of
/// the unit disc for restricted members:
/// `([2]^{m+1} - 1 - ([2]^m - 1) alpha)/([2]^m ([2]-alpha))
///  * (1 - ([2]-alpha)/([2]+alpha) * b1)`.
pub fn covering_radius<T: Real>(p: &ClassParams<T>, b1: T) -> Result<T> {
    validate_b1(b1)?;
    let two = crate::qcore::q_bracket(2, p.q);
    let pow = p.bracket_pow(2);
    let base = (pow * two - T::one() - (pow - T::one()) * p.alpha) / (pow * (two - p.alpha));
    Ok(base * (T::one() - (two - p.alpha) / (two + p.alpha) * b1))
}

/// The r -> 1 limit of the lower distortion bound, `(1 - b1) - bracket`.
/// Coincides with the covering radius at b1 = 0; for b1 > 0 the two are
/// distinct quantities and both are reported.
pub fn lower_bound_limit<T: Real>(p: &ClassParams<T>, b1: T, factor: B1Factor) -> Result<T> {
    validate_b1(b1)?;
    Ok(T::one() - b1 - distortion_bracket(p, b1, factor))
}

/// One row of the bound table the CLI emits.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundTableRow<T> {
    pub q: T,
    pub m: u32,
    pub alpha: T,
    pub b1: T,
    pub r: T,
    pub lower: T,
    pub upper: T,
    pub covering_radius: T,
}

/// Tabulate the distortion envelope and covering radius over radii.
pub fn bound_table<T: Real>(
    p: &ClassParams<T>,
    b1: T,
    radii: &[T],
    factor: B1Factor,
) -> Result<Vec<BoundTableRow<T>>> {
    let covering = covering_radius(p, b1)?;
    radii
        .iter()
        .map(|&r| {
            let bound = distortion_bounds_with(p, b1, r, factor)?;
            Ok(BoundTableRow {
                q: p.q.get(),
                m: p.m,
                alpha: p.alpha,
                b1,
                r,
                lower: bound.lower,
                upper: bound.upper,
                covering_radius: covering,
            })
        })
        .collect()
}
