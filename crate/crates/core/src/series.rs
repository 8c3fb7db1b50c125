//! Truncated power-series engine: representation and evaluation of
//! analytic and harmonic series, classical and q-difference derivatives,
//! the Hadamard product, and the iterated q-differential operator.

use crate::error::{Error, Result};
use crate::qcore::{q_bracket, q_bracket_pow, QParam};
use crate::scalar::{real, Real};
use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A plain polynomial with complex coefficients, indexed from the
/// constant term. Produced by the derivative operators, whose results
/// generally have a nonzero constant term.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> Polynomial<T> {
    pub fn new(coeffs: Vec<Complex<T>>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs.get(k).copied().unwrap_or_else(Complex::zero)
    }

    /// Horner evaluation from the highest power down.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}

/// Truncated coefficient sequence of an analytic function on the unit
/// disc with no constant term: `c_1 z + c_2 z^2 + ... + c_N z^N`.
///
/// The constant slot is stored but pinned to zero, so `coeff(n)` is the
/// coefficient of `z^n` directly.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticSeries<T> {
    coeffs: Vec<Complex<T>>, // index 0..=N, coeffs[0] == 0
}

impl<T: Real> AnalyticSeries<T> {
    /// Build from the tail `c_1 ... c_N`.
    pub fn from_tail(tail: Vec<Complex<T>>) -> Result<Self> {
        if tail.is_empty() {
            return Err(Error::EmptySeries);
        }
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(Complex::zero());
        coeffs.extend(tail);
        Ok(Self { coeffs })
    }

    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex::zero(); order.max(1) + 1],
        }
    }

    /// The identity `z`, padded to the given order.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Complex::new(T::one(), T::zero());
        s
    }

    /// A single term `c z^n`, padded to the given order.
    pub fn monomial(order: usize, n: u32, c: Complex<T>) -> Result<Self> {
        let order = order.max(1);
        if n == 0 || n as usize > order {
            return Err(Error::IndexBeyondCapacity {
                index: n,
                capacity: order,
            });
        }
        let mut s = Self::zero(order);
        s.coeffs[n as usize] = c;
        Ok(s)
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Complex<T> {
        self.coeffs.get(n).copied().unwrap_or_else(Complex::zero)
    }

    /// Coefficients `c_1 ... c_N`.
    pub fn tail(&self) -> &[Complex<T>] {
        &self.coeffs[1..]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Return a copy padded with zero coefficients up to `order`.
    pub fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, Complex::zero());
        Self { coeffs }
    }

    /// Horner evaluation from the highest power down.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}

/// Coefficient sequence of the classical derivative: `z^(n-1)` carries
/// `n * c_n`.
pub fn derivative<T: Real>(s: &AnalyticSeries<T>) -> Polynomial<T> {
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, &c)| c * real::<T>(n as f64))
        .collect();
    Polynomial::new(coeffs)
}

/// The q-difference quotient `(s(z) - s(qz)) / ((1 - q) z)`, with the
/// removable singularity at the origin filled by its limit `c_1`.
pub fn q_derivative_pointwise<T: Real>(
    s: &AnalyticSeries<T>,
    q: QParam<T>,
    z: Complex<T>,
) -> Complex<T> {
    if z.is_zero() {
        return s.coeff(1);
    }
    let qv = q.get();
    let num = s.eval(z) - s.eval(z * qv);
    num / (z * (T::one() - qv))
}

/// Coefficient form of the q-derivative: `z^(n-1)` carries `[n]_q c_n`.
pub fn q_derivative_coeffs<T: Real>(s: &AnalyticSeries<T>, q: QParam<T>) -> Polynomial<T> {
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, &c)| c * q_bracket(n as u32, q))
        .collect();
    Polynomial::new(coeffs)
}

/// Coefficient-wise (Hadamard) product; the shorter series is
/// zero-padded.
pub fn hadamard<T: Real>(s1: &AnalyticSeries<T>, s2: &AnalyticSeries<T>) -> AnalyticSeries<T> {
    let order = s1.order().max(s2.order());
    let tail = (1..=order).map(|n| s1.coeff(n) * s2.coeff(n)).collect();
    AnalyticSeries::from_tail(tail).expect("order >= 1")
}

/// The convolution kernel whose n-th coefficient is `[n]_q^m`; applying
/// the m-fold operator equals a Hadamard product with this kernel.
pub fn salagean_kernel<T: Real>(q: QParam<T>, m: u32, order: usize) -> AnalyticSeries<T> {
    let tail = (1..=order.max(1))
        .map(|n| Complex::new(q_bracket_pow(n as u32, q, m), T::zero()))
        .collect();
    AnalyticSeries::from_tail(tail).expect("order >= 1")
}

/// The m-fold q-differential operator on an analytic series: the n-th
/// coefficient is multiplied by `[n]_q^m`; `m = 0` is the identity.
pub fn salagean_q<T: Real>(s: &AnalyticSeries<T>, q: QParam<T>, m: u32) -> AnalyticSeries<T> {
    if m == 0 {
        return s.clone();
    }
    let tail = s
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, &c)| c * q_bracket_pow(n as u32, q, m))
        .collect();
    AnalyticSeries::from_tail(tail).expect("order >= 1")
}

/// Sign attached to the co-analytic part of a harmonic function or of
/// an operator image. Kept as metadata so stored coefficient moduli
/// stay independent of the operator order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoSign {
    Plus,
    Minus,
}

impl CoSign {
    /// `(-1)^m`
    pub fn from_operator_order(m: u32) -> Self {
        if m.is_multiple_of(2) {
            CoSign::Plus
        } else {
            CoSign::Minus
        }
    }

    pub fn combine(self, other: CoSign) -> CoSign {
        if self == other {
            CoSign::Plus
        } else {
            CoSign::Minus
        }
    }

    pub fn scalar<T: Real>(self) -> T {
        match self {
            CoSign::Plus => T::one(),
            CoSign::Minus => -T::one(),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            CoSign::Plus => 1,
            CoSign::Minus => -1,
        }
    }
}

/// A harmonic mapping of the disc, `f = h + sign * conj(g)`, stored as
/// the pair of analytic series plus the co-analytic sign.
///
/// Invariants: `h` has leading coefficient exactly 1, and `|b_1| <= 1`
/// where `b_1` is the leading coefficient of `g`. Equality `|b_1| = 1`
/// marks a hull-boundary function, admitted by the constructors but
/// rejected by the univalence checks.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicSeries<T> {
    h: AnalyticSeries<T>,
    g: AnalyticSeries<T>,
    co_sign: CoSign,
}

impl<T: Real> HarmonicSeries<T> {
    pub fn new(h: AnalyticSeries<T>, g: AnalyticSeries<T>) -> Result<Self> {
        Self::with_co_sign(h, g, CoSign::Plus)
    }

    pub fn with_co_sign(
        h: AnalyticSeries<T>,
        g: AnalyticSeries<T>,
        co_sign: CoSign,
    ) -> Result<Self> {
        let c1 = h.coeff(1);
        if c1 != Complex::new(T::one(), T::zero()) {
            return Err(Error::UnnormalizedLeadingCoeff {
                re: c1.re.to_f64().unwrap_or(f64::NAN),
                im: c1.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        let b1 = g.coeff(1).norm();
        if b1 > T::one() {
            return Err(Error::CoAnalyticLeadingTooLarge(
                b1.to_f64().unwrap_or(f64::NAN),
            ));
        }
        let order = h.order().max(g.order());
        Ok(Self {
            h: h.padded(order),
            g: g.padded(order),
            co_sign,
        })
    }

    /// The identity map `f(z) = z`.
    pub fn identity(order: usize) -> Self {
        Self {
            h: AnalyticSeries::identity(order),
            g: AnalyticSeries::zero(order),
            co_sign: CoSign::Plus,
        }
    }

    pub fn h(&self) -> &AnalyticSeries<T> {
        &self.h
    }

    pub fn g(&self) -> &AnalyticSeries<T> {
        &self.g
    }

    pub fn co_sign(&self) -> CoSign {
        self.co_sign
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    /// Modulus of the leading co-analytic coefficient.
    pub fn b1(&self) -> T {
        self.g.coeff(1).norm()
    }

    /// True when `|b_1| = 1`, i.e. the function sits on the closure
    /// boundary of the coefficient body rather than in its interior.
    pub fn is_hull_boundary(&self) -> bool {
        self.b1() >= T::one()
    }

    /// Evaluate `h(z) + sign * conj(g(z))`.
    ///
    /// Panics outside the open unit disc, where the series means nothing.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        assert!(z.norm() < T::one(), "evaluation requires |z| < 1");
        self.h.eval(z) + self.g.eval(z).conj() * self.co_sign.scalar::<T>()
    }
}

/// Image of a harmonic series under the m-fold q-differential operator,
/// kept as the transformed parts plus the accumulated co-analytic sign,
/// so that `eval` yields `Dh(z) + sign * conj(Dg(z))`.
#[derive(Clone, Debug, PartialEq)]
pub struct SalageanImage<T> {
    pub analytic: AnalyticSeries<T>,
    pub co_analytic: AnalyticSeries<T>,
    pub co_sign: CoSign,
}

impl<T: Real> SalageanImage<T> {
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.analytic.eval(z) + self.co_analytic.eval(z).conj() * self.co_sign.scalar::<T>()
    }
}

/// The m-fold q-differential operator on a harmonic series: both parts
/// are transformed coefficient-wise and the sign `(-1)^m` is attached
/// to the co-analytic part (combined with the sign the input carries).
pub fn salagean_q_harmonic<T: Real>(
    f: &HarmonicSeries<T>,
    q: QParam<T>,
    m: u32,
) -> SalageanImage<T> {
    SalageanImage {
        analytic: salagean_q(&f.h, q, m),
        co_analytic: salagean_q(&f.g, q, m),
        co_sign: f.co_sign.combine(CoSign::from_operator_order(m)),
    }
}

/// Evaluation grid: concentric rings of equally spaced angles.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<T> {
    pub radii: Vec<T>,
    pub angles_per_ring: usize,
    pub max_radius: T,
}

impl<T: Real> GridSpec<T> {
    pub fn new(radii: Vec<T>, angles_per_ring: usize, max_radius: T) -> Result<Self> {
        if max_radius <= T::zero() || max_radius >= T::one() {
            return Err(Error::GridMaxRadiusOutOfRange(
                max_radius.to_f64().unwrap_or(f64::NAN),
            ));
        }
        if radii.is_empty() || angles_per_ring == 0 {
            return Err(Error::EmptyGrid);
        }
        for &r in &radii {
            if r <= T::zero() || r > max_radius {
                return Err(Error::GridRadiusOutOfRange(r.to_f64().unwrap_or(f64::NAN)));
            }
        }
        Ok(Self {
            radii,
            angles_per_ring,
            max_radius,
        })
    }

    /// Default verification grid: 32 radii from 0.05 to 0.999 spaced
    /// geometrically in (1 - r) so sampling concentrates near the
    /// boundary, with 128 angles per ring.
    pub fn default_verification() -> Self {
        Self::geometric(32, real(0.05), real(0.999), 128)
    }

    /// `count` radii from `r_min` to `r_max`, geometric in (1 - r).
    pub fn geometric(count: usize, r_min: T, r_max: T, angles_per_ring: usize) -> Self {
        assert!(count >= 2 && r_min < r_max);
        let one = T::one();
        let gamma = ((one - r_max) / (one - r_min)).powf(one / real::<T>((count - 1) as f64));
        let mut radii: Vec<T> = (0..count)
            .map(|k| one - (one - r_min) * gamma.powi(k as i32))
            .collect();
        // Pin the endpoints so rounding in powi cannot push a radius
        // past max_radius.
        radii[0] = r_min;
        radii[count - 1] = r_max;
        Self {
            radii,
            angles_per_ring,
            max_radius: r_max,
        }
    }

    /// Ring-major iteration over `r_k e^{i theta_j}`.
    pub fn points(&self) -> impl Iterator<Item = Complex<T>> + '_ {
        let angles = self.angles_per_ring;
        let two_pi = T::PI() + T::PI();
        self.radii.iter().flat_map(move |&r| {
            (0..angles).map(move |j| {
                let theta = two_pi * real::<T>(j as f64) / real::<T>(angles as f64);
                Complex::from_polar(r, theta)
            })
        })
    }

    /// Sub-grid with at most the given numbers of radii and angles,
    /// used to keep pairwise checks affordable.
    pub fn decimated(&self, max_radii: usize, max_angles: usize) -> Self {
        let rstep = self.radii.len().div_ceil(max_radii).max(1);
        let radii: Vec<T> = self.radii.iter().copied().step_by(rstep).collect();
        Self {
            radii,
            angles_per_ring: self.angles_per_ring.min(max_angles),
            max_radius: self.max_radius,
        }
    }
}
