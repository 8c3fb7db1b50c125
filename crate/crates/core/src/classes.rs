//! Coefficient-class machinery: the membership functional, verdicts for
//! the unrestricted and restricted families, the margin-zero extremal
//! functions, and the extreme points of the restricted hull together
//! with their convex combinations.

use crate::error::{Error, Result};
use crate::qcore::ClassParams;
use crate::scalar::{real, Real};
use crate::series::{AnalyticSeries, CoSign, HarmonicSeries};
use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Verdict attached to a membership report.
///
/// The functional test is only sufficient for the unrestricted family,
/// so a failing unrestricted input is `NotCertified`, never `NonMember`.
/// For the restricted sign family the test is an exact characterization
/// and the verdicts are `MemberIff` / `NonMember`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    MemberSufficient,
    NotCertified,
    MemberIff,
    NonMember,
}

impl Verdict {
    pub fn is_member(self) -> bool {
        matches!(self, Verdict::MemberSufficient | Verdict::MemberIff)
    }
}

/// Value of the coefficient functional against its budget.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport<T> {
    pub functional_value: T,
    pub budget: T,
    pub margin: T,
    pub verdict: Verdict,
}

/// Weighted coefficient sum
/// `sum_{n>=2} [n]^m ([n]-alpha) |a_n| + sum_{n>=1} [n]^m ([n]+alpha) |b_n|`
/// evaluated over the stored coefficients.
fn functional_value<T: Real>(f: &HarmonicSeries<T>, p: &ClassParams<T>) -> T {
    let mut acc = T::zero();
    for n in 2..=f.order() {
        let a = f.h().coeff(n).norm();
        if a > T::zero() {
            acc = acc + p.weight_analytic(n as u32) * a;
        }
    }
    for n in 1..=f.order() {
        let b = f.g().coeff(n).norm();
        if b > T::zero() {
            acc = acc + p.weight_co_analytic(n as u32) * b;
        }
    }
    acc
}

/// Sufficiency test for arbitrary coefficients: a nonnegative margin
/// certifies membership; a negative one certifies nothing.
pub fn coefficient_functional<T: Real>(
    f: &HarmonicSeries<T>,
    p: &ClassParams<T>,
) -> MembershipReport<T> {
    let value = functional_value(f, p);
    let budget = p.budget();
    let margin = budget - value;
    MembershipReport {
        functional_value: value,
        budget,
        margin,
        verdict: if margin >= T::zero() {
            Verdict::MemberSufficient
        } else {
            Verdict::NotCertified
        },
    }
}

/// Why a series fails the restricted sign pattern, if it does.
///
/// The pattern is `h(z) = z - sum a_n z^n` with `a_n >= 0` and
/// co-analytic coefficients real with `b_n >= 0`.
pub fn restricted_form_violation<T: Real>(f: &HarmonicSeries<T>) -> Option<String> {
    for n in 2..=f.order() {
        let c = f.h().coeff(n);
        if !c.im.is_zero() {
            return Some(format!("h coefficient at index {n} has an imaginary part"));
        }
        if c.re > T::zero() {
            return Some(format!("h coefficient at index {n} is positive"));
        }
    }
    for n in 1..=f.order() {
        let c = f.g().coeff(n);
        if !c.im.is_zero() {
            return Some(format!("g coefficient at index {n} has an imaginary part"));
        }
        if c.re < T::zero() {
            return Some(format!("g coefficient at index {n} is negative"));
        }
    }
    None
}

/// Exact membership characterization for the restricted sign family.
///
/// Rejects inputs outside the family; for inputs inside it, the verdict
/// is `MemberIff` exactly when the margin is nonnegative.
pub fn is_member_restricted<T: Real>(
    f: &HarmonicSeries<T>,
    p: &ClassParams<T>,
) -> Result<MembershipReport<T>> {
    if let Some(reason) = restricted_form_violation(f) {
        return Err(Error::NotRestrictedForm(reason));
    }
    let mut report = coefficient_functional(f, p);
    report.verdict = if report.margin >= T::zero() {
        Verdict::MemberIff
    } else {
        Verdict::NonMember
    };
    Ok(report)
}

fn check_weight_indices(indices: impl Iterator<Item = u32>, min: u32) -> Result<()> {
    let mut seen = Vec::new();
    for n in indices {
        if n < min {
            return Err(Error::WeightIndexTooSmall { index: n, min });
        }
        if seen.contains(&n) {
            return Err(Error::DuplicateWeightIndex(n));
        }
        seen.push(n);
    }
    Ok(())
}

/// Complex weights (x_n)_{n>=2}, (y_n)_{n>=1} with moduli summing to 1,
/// parameterizing the margin-zero extremal functions.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalWeights<T> {
    x: Vec<(u32, Complex<T>)>,
    y: Vec<(u32, Complex<T>)>,
}

impl<T: Real> ExtremalWeights<T> {
    pub fn new(x: Vec<(u32, Complex<T>)>, y: Vec<(u32, Complex<T>)>) -> Result<Self> {
        check_weight_indices(x.iter().map(|&(n, _)| n), 2)?;
        check_weight_indices(y.iter().map(|&(n, _)| n), 1)?;
        let sum = x
            .iter()
            .map(|(_, v)| v.norm())
            .chain(y.iter().map(|(_, v)| v.norm()))
            .fold(T::zero(), |a, b| a + b);
        if (sum - T::one()).abs() > real(WEIGHT_SUM_TOL) {
            return Err(Error::WeightSumNotOne(sum.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &[(u32, Complex<T>)] {
        &self.x
    }

    pub fn y(&self) -> &[(u32, Complex<T>)] {
        &self.y
    }

    pub fn max_index(&self) -> u32 {
        self.x
            .iter()
            .chain(self.y.iter())
            .map(|&(n, _)| n)
            .max()
            .unwrap_or(1)
    }
}

/// Nonnegative weights (X_n)_{n>=1}, (Y_n)_{n>=1} summing to 1,
/// parameterizing the convex hull of the restricted family.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexWeights<T> {
    x: Vec<(u32, T)>,
    y: Vec<(u32, T)>,
}

impl<T: Real> ConvexWeights<T> {
    pub fn new(x: Vec<(u32, T)>, y: Vec<(u32, T)>) -> Result<Self> {
        check_weight_indices(x.iter().map(|&(n, _)| n), 1)?;
        check_weight_indices(y.iter().map(|&(n, _)| n), 1)?;
        for &(n, v) in x.iter().chain(y.iter()) {
            if v < T::zero() {
                return Err(Error::NegativeWeight {
                    index: n,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let sum = x
            .iter()
            .map(|&(_, v)| v)
            .chain(y.iter().map(|&(_, v)| v))
            .fold(T::zero(), |a, b| a + b);
        if (sum - T::one()).abs() > real(WEIGHT_SUM_TOL) {
            return Err(Error::WeightSumNotOne(sum.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &[(u32, T)] {
        &self.x
    }

    pub fn y(&self) -> &[(u32, T)] {
        &self.y
    }

    /// The weight on the identity component, which equals the
    /// membership margin of the combination divided by the budget.
    pub fn identity_weight(&self) -> T {
        self.x
            .iter()
            .find(|&&(n, _)| n == 1)
            .map(|&(_, v)| v)
            .unwrap_or_else(T::zero)
    }

    pub fn max_index(&self) -> u32 {
        self.x
            .iter()
            .chain(self.y.iter())
            .map(|&(n, _)| n)
            .max()
            .unwrap_or(1)
    }
}

fn capacity_check(n: u32, order: usize) -> Result<()> {
    if n as usize > order {
        return Err(Error::IndexBeyondCapacity {
            index: n,
            capacity: order,
        });
    }
    Ok(())
}

/// The function achieving equality in the coefficient inequality:
/// `a_n = (1-alpha)/([n]^m([n]-alpha)) x_n`,
/// `b_n = (1-alpha)/([n]^m([n]+alpha)) y_n`.
/// Its membership margin is zero up to rounding.
pub fn extremal_function<T: Real>(
    p: &ClassParams<T>,
    w: &ExtremalWeights<T>,
    order: usize,
) -> Result<HarmonicSeries<T>> {
    let order = order.max(1);
    capacity_check(w.max_index(), order)?;
    let mut h = AnalyticSeries::identity(order);
    let mut g = AnalyticSeries::zero(order);
    let mut h_tail: Vec<Complex<T>> = h.tail().to_vec();
    let budget = p.budget();
    for &(n, xv) in w.x() {
        h_tail[n as usize - 1] = xv * (budget / p.weight_analytic(n));
    }
    h = AnalyticSeries::from_tail(h_tail)?;
    let mut g_tail: Vec<Complex<T>> = g.tail().to_vec();
    for &(n, yv) in w.y() {
        g_tail[n as usize - 1] = yv * (budget / p.weight_co_analytic(n));
    }
    g = AnalyticSeries::from_tail(g_tail)?;
    HarmonicSeries::new(h, g)
}

/// Extreme point with a single analytic term:
/// `z - (1-alpha)/([n]^m([n]-alpha)) z^n` for n >= 2, the identity for
/// n = 1.
pub fn extreme_point_h<T: Real>(
    p: &ClassParams<T>,
    n: u32,
    order: usize,
) -> Result<HarmonicSeries<T>> {
    let order = order.max(1);
    capacity_check(n, order)?;
    if n <= 1 {
        return Ok(HarmonicSeries::identity(order));
    }
    let coeff = p.budget() / p.weight_analytic(n);
    let mut tail = AnalyticSeries::<T>::identity(order).tail().to_vec();
    tail[n as usize - 1] = Complex::new(-coeff, T::zero());
    HarmonicSeries::new(
        AnalyticSeries::from_tail(tail)?,
        AnalyticSeries::zero(order),
    )
}

/// Extreme point with a single co-analytic term of magnitude
/// `(1-alpha)/([n]^m([n]+alpha))`; the sign `(-1)^m` is carried as
/// metadata, never folded into the stored coefficient.
///
/// At alpha = 0, n = 1 the magnitude is exactly 1: the result is a
/// hull-boundary function, flagged through `is_hull_boundary` rather
/// than clamped.
pub fn extreme_point_g<T: Real>(
    p: &ClassParams<T>,
    n: u32,
    order: usize,
) -> Result<HarmonicSeries<T>> {
    let order = order.max(1);
    if n == 0 {
        return Err(Error::WeightIndexTooSmall { index: 0, min: 1 });
    }
    capacity_check(n, order)?;
    let coeff = p.budget() / p.weight_co_analytic(n);
    let g = AnalyticSeries::monomial(order, n, Complex::new(coeff, T::zero()))?;
    HarmonicSeries::with_co_sign(
        AnalyticSeries::identity(order),
        g,
        CoSign::from_operator_order(p.m),
    )
}

/// Convex combination `sum X_n h_n + sum Y_n g_n` of the extreme
/// points. Its restricted membership margin equals `X_1 (1 - alpha)`.
pub fn convex_combination<T: Real>(
    p: &ClassParams<T>,
    w: &ConvexWeights<T>,
    order: usize,
) -> Result<HarmonicSeries<T>> {
    let order = order.max(1);
    capacity_check(w.max_index(), order)?;
    let budget = p.budget();
    // Every component contributes its weight to the leading z, and the
    // weights sum to 1, so the leading coefficient is pinned to 1.
    let mut h_tail = vec![Complex::<T>::zero(); order];
    h_tail[0] = Complex::new(T::one(), T::zero());
    let mut g_tail = vec![Complex::<T>::zero(); order];
    for &(n, xv) in w.x() {
        if n >= 2 {
            let coeff = budget / p.weight_analytic(n);
            h_tail[n as usize - 1] = h_tail[n as usize - 1] - Complex::new(coeff * xv, T::zero());
        }
    }
    for &(n, yv) in w.y() {
        let coeff = budget / p.weight_co_analytic(n);
        g_tail[n as usize - 1] = g_tail[n as usize - 1] + Complex::new(coeff * yv, T::zero());
    }
    HarmonicSeries::with_co_sign(
        AnalyticSeries::from_tail(h_tail)?,
        AnalyticSeries::from_tail(g_tail)?,
        CoSign::from_operator_order(p.m),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::ClassParams;
    use crate::series::CoSign;

    type C = Complex<f64>;

    fn c(re: f64) -> C {
        Complex::new(re, 0.0)
    }

    fn params(q: f64, m: u32, alpha: f64) -> ClassParams<f64> {
        ClassParams::from_parts(q, m, alpha).unwrap()
    }

    #[test]
    fn identity_has_full_margin() {
        let p = params(0.5, 1, 0.25);
        let rep = coefficient_functional(&HarmonicSeries::identity(4), &p);
        assert_eq!(rep.functional_value, 0.0);
        assert_eq!(rep.margin, 0.75);
        assert_eq!(rep.verdict, Verdict::MemberSufficient);
    }

    #[test]
    fn functional_hand_value() {
        // a_2 = 0.2, b_1 = 0.1 at (q, m, alpha) = (0.5, 1, 0):
        // 2.25 * 0.2 + 1 * 0.1 = 0.55.
        let p = params(0.5, 1, 0.0);
        let h = AnalyticSeries::from_tail(vec![c(1.0), c(0.2)]).unwrap();
        let g = AnalyticSeries::from_tail(vec![c(0.1), C::zero()]).unwrap();
        let f = HarmonicSeries::new(h, g).unwrap();
        let rep = coefficient_functional(&f, &p);
        assert!((rep.functional_value - 0.55).abs() < 1e-15);
        assert!((rep.margin - 0.45).abs() < 1e-15);
    }

    #[test]
    fn extremal_function_examples() {
        let p = params(0.5, 1, 0.0);
        let w = ExtremalWeights::new(vec![(2, c(1.0))], vec![]).unwrap();
        let f = extremal_function(&p, &w, 4).unwrap();
        assert!((f.h().coeff(2).re - 4.0 / 9.0).abs() < 1e-15);
        let rep = coefficient_functional(&f, &p);
        assert!(rep.margin.abs() < 1e-12);

        let p = params(0.5, 0, 0.5);
        let w = ExtremalWeights::new(vec![], vec![(1, c(1.0))]).unwrap();
        let f = extremal_function(&p, &w, 4).unwrap();
        assert!((f.b1() - 1.0 / 3.0).abs() < 1e-15);

        let w = ExtremalWeights::new(vec![(2, c(0.5))], vec![(1, c(0.5))]).unwrap();
        let f = extremal_function(&p, &w, 4).unwrap();
        let rep = coefficient_functional(&f, &p);
        assert!(rep.margin.abs() < 1e-12);
    }

    #[test]
    fn extremal_weights_validation() {
        assert!(matches!(
            ExtremalWeights::<f64>::new(vec![(1, c(1.0))], vec![]),
            Err(Error::WeightIndexTooSmall { .. })
        ));
        assert!(matches!(
            ExtremalWeights::<f64>::new(vec![(2, c(0.4))], vec![]),
            Err(Error::WeightSumNotOne(_))
        ));
        assert!(matches!(
            ExtremalWeights::<f64>::new(vec![(2, c(0.5)), (2, c(0.5))], vec![]),
            Err(Error::DuplicateWeightIndex(2))
        ));
    }

    #[test]
    fn extreme_point_h_examples() {
        let p = params(0.5, 0, 0.0);
        let f = extreme_point_h(&p, 1, 4).unwrap();
        assert_eq!(*f.h(), AnalyticSeries::identity(4));

        let f = extreme_point_h(&p, 2, 4).unwrap();
        assert!((f.h().coeff(2).re + 2.0 / 3.0).abs() < 1e-15);

        let p = params(0.9, 1, 0.5);
        let f = extreme_point_h(&p, 2, 4).unwrap();
        assert!((f.h().coeff(2).re + 0.18796992481203006).abs() < 1e-12);

        assert!(matches!(
            extreme_point_h(&p, 9, 4),
            Err(Error::IndexBeyondCapacity { .. })
        ));
    }

    #[test]
    fn extreme_point_g_examples() {
        // alpha = 0, n = 1 sits on the hull boundary with |b1| = 1.
        let p = params(0.5, 0, 0.0);
        let f = extreme_point_g(&p, 1, 4).unwrap();
        assert_eq!(f.b1(), 1.0);
        assert!(f.is_hull_boundary());

        let p = params(0.5, 0, 0.5);
        let f = extreme_point_g(&p, 1, 4).unwrap();
        assert!((f.b1() - 1.0 / 3.0).abs() < 1e-15);
        assert!(!f.is_hull_boundary());

        let p = params(0.5, 2, 0.0);
        let f = extreme_point_g(&p, 2, 4).unwrap();
        assert!((f.g().coeff(2).re - 1.0 / 3.375).abs() < 1e-15);
        assert_eq!(f.co_sign(), CoSign::Plus);

        let p = params(0.5, 1, 0.0);
        let f = extreme_point_g(&p, 2, 4).unwrap();
        assert_eq!(f.co_sign(), CoSign::Minus);
        assert!(f.g().coeff(2).re > 0.0);
    }

    #[test]
    fn restricted_membership_verdicts() {
        let p = params(0.5, 1, 0.0);
        let rep = is_member_restricted(&HarmonicSeries::identity(4), &p).unwrap();
        assert_eq!(rep.verdict, Verdict::MemberIff);

        let f = extreme_point_h(&p, 2, 4).unwrap();
        let rep = is_member_restricted(&f, &p).unwrap();
        assert_eq!(rep.verdict, Verdict::MemberIff);
        assert!(rep.margin.abs() < 1e-12);

        // One percent over budget.
        let a2 = 1.01 / 2.25;
        let h = AnalyticSeries::from_tail(vec![c(1.0), c(-a2)]).unwrap();
        let f = HarmonicSeries::new(h, AnalyticSeries::zero(2)).unwrap();
        let rep = is_member_restricted(&f, &p).unwrap();
        assert_eq!(rep.verdict, Verdict::NonMember);
        assert!(rep.margin < 0.0);
    }

    #[test]
    fn restricted_rejects_wrong_sign_pattern() {
        let p = params(0.5, 1, 0.0);
        let h = AnalyticSeries::from_tail(vec![c(1.0), c(0.2)]).unwrap();
        let f = HarmonicSeries::new(h, AnalyticSeries::zero(2)).unwrap();
        assert!(matches!(
            is_member_restricted(&f, &p),
            Err(Error::NotRestrictedForm(_))
        ));
    }

    #[test]
    fn convex_combination_examples() {
        let p = params(0.5, 0, 0.5);
        let w = ConvexWeights::new(vec![(1, 1.0)], vec![]).unwrap();
        let f = convex_combination(&p, &w, 4).unwrap();
        assert_eq!(*f.h(), AnalyticSeries::identity(4));
        assert!(f.g().is_zero());

        let w = ConvexWeights::new(vec![(2, 1.0)], vec![]).unwrap();
        let f = convex_combination(&p, &w, 4).unwrap();
        let h2 = extreme_point_h(&p, 2, 4).unwrap();
        assert_eq!(f.h(), h2.h());

        // Equal thirds on h_1, h_2, g_1: a_2 = (1/3) * 0.5/(1 * 1.0),
        // b_1 = (1/3) * 0.5/(1 * 1.5), and the margin equals X_1 (1-alpha).
        let third = 1.0 / 3.0;
        let w = ConvexWeights::new(vec![(1, third), (2, third)], vec![(1, third)]).unwrap();
        let f = convex_combination(&p, &w, 4).unwrap();
        assert!((f.h().coeff(2).re + 1.0 / 6.0).abs() < 1e-14);
        assert!((f.g().coeff(1).re - 1.0 / 9.0).abs() < 1e-14);
        let rep = is_member_restricted(&f, &p).unwrap();
        assert!((rep.margin - third * 0.5).abs() < 1e-12);
    }

    #[test]
    fn convex_weights_validation() {
        assert!(matches!(
            ConvexWeights::new(vec![(1, -0.5)], vec![(1, 1.5)]),
            Err(Error::NegativeWeight { .. })
        ));
        assert!(matches!(
            ConvexWeights::new(vec![(1, 0.7)], vec![]),
            Err(Error::WeightSumNotOne(_))
        ));
    }
}
