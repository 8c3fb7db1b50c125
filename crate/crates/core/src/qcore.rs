//! q-integers `[n]_q` and their powers, evaluated cancellation-safely
//! for q arbitrarily close to 1.

use crate::error::{Error, Result};
use crate::scalar::Real;
use serde::{Deserialize, Serialize};

/// The deformation parameter, pinned to the open interval (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QParam<T>(T);

impl<T: Real> QParam<T> {
    pub fn new(q: T) -> Result<Self> {
        if q > T::zero() && q < T::one() {
            Ok(Self(q))
        } else {
            Err(Error::QOutOfRange(q.to_f64().unwrap_or(f64::NAN)))
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

/// The (q, m, alpha) triple parameterizing a coefficient class:
/// deformation parameter, operator order, and order of the class.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassParams<T> {
    pub q: QParam<T>,
    pub m: u32,
    pub alpha: T,
}

impl<T: Real> ClassParams<T> {
    pub fn new(q: QParam<T>, m: u32, alpha: T) -> Result<Self> {
        if alpha >= T::zero() && alpha < T::one() {
            Ok(Self { q, m, alpha })
        } else {
            Err(Error::AlphaOutOfRange(alpha.to_f64().unwrap_or(f64::NAN)))
        }
    }

    /// Convenience constructor validating both q and alpha.
    pub fn from_parts(q: T, m: u32, alpha: T) -> Result<Self> {
        Self::new(QParam::new(q)?, m, alpha)
    }

    /// The coefficient budget 1 - alpha.
    #[inline]
    pub fn budget(&self) -> T {
        T::one() - self.alpha
    }

    /// `[n]_q^m`
    #[inline]
    pub fn bracket_pow(&self, n: u32) -> T {
        q_bracket_pow(n, self.q, self.m)
    }

    /// Weight multiplying |a_n| in the coefficient functional:
    /// `[n]_q^m ([n]_q - alpha)`.
    pub fn weight_analytic(&self, n: u32) -> T {
        self.bracket_pow(n) * (q_bracket(n, self.q) - self.alpha)
    }

    /// Weight multiplying |b_n| in the coefficient functional:
    /// `[n]_q^m ([n]_q + alpha)`.
    pub fn weight_co_analytic(&self, n: u32) -> T {
        self.bracket_pow(n) * (q_bracket(n, self.q) + self.alpha)
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
///
/// Evaluated by compensated summation of the plain powers rather than by
/// the ratio `(1 - q^n)/(1 - q)`, which loses all precision as q -> 1.
///
/// Panics if `n == 0`.
pub fn q_bracket<T: Real>(n: u32, q: QParam<T>) -> T {
    assert!(n >= 1, "q_bracket is defined for positive integers only");
    let q = q.get();
    // Kahan summation; the terms span many magnitudes when q is small.
    let mut sum = T::one();
    let mut comp = T::zero();
    let mut power = T::one();
    for _ in 1..n {
        power = power * q;
        let y = power - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// `[n]_q^m`, with `m = 0` returning exactly 1.
pub fn q_bracket_pow<T: Real>(n: u32, q: QParam<T>, m: u32) -> T {
    if m == 0 {
        return T::one();
    }
    q_bracket(n, q).powi(m as i32)
}
