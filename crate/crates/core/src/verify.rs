//! Numerical verification engine: grid-based checks of the class
//! condition, sense-preservation, sampled injectivity, the real-axis
//! necessity witness, distortion/covering conformance, and the two
//! operator reductions. Every check returns a report with the critical
//! sampled statistic and a witness point when it fails.
//!
//! Grid reductions are sequential with first-strict-improvement
//! updates, so reports are reproducible run to run.

use crate::bounds::{covering_radius, distortion_bounds, distortion_bracket, B1Factor};
use crate::classes::is_member_restricted;
use crate::error::{Error, Result};
use crate::qcore::{q_bracket_pow, ClassParams, QParam};
use crate::scalar::{real, Real};
use crate::series::{derivative, salagean_q_harmonic, AnalyticSeries, GridSpec, HarmonicSeries};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Denominators below this are treated as degenerate rather than divided by.
const DIVISION_GUARD: f64 = 1e-14;

/// Membership gate for the bound checks: margin-zero members (extreme
/// points, extremal functions) can round a few ulps below zero and must
/// still be admitted as boundary members.
const MEMBER_GATE_TOL: f64 = 1e-12;

/// Default tolerance for grid checks against closed-form bounds.
pub const GRID_CHECK_TOL: f64 = 1e-6;
/// Default tolerance for algebraic identities.
pub const IDENTITY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    RatioCondition,
    SensePreserving,
    InjectivitySampled,
    Distortion,
    Covering,
    ReductionIdentity,
    ReductionClassicalLimit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    BoundViolated,
    DegenerateDenominator,
    CriticalPoint,
    NonMonotone,
}

/// Where a failing check was observed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness<T> {
    Point { re: T, im: T },
    Radius { r0: T },
}

impl<T: Real> Witness<T> {
    fn point(z: Complex<T>) -> Self {
        Witness::Point { re: z.re, im: z.im }
    }
}

/// Outcome of one verification check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport<T> {
    pub check: CheckKind,
    pub pass: bool,
    /// The critical sampled statistic (minimum ratio real part, maximum
    /// dilatation, worst bound excess, ...).
    pub extremum: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness<T>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec<T>>,
    pub tol: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_kind: Option<FailureKind>,
    /// Minimum sampled Jacobian, reported by the sense check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobian_min: Option<T>,
    /// Extra allowance granted near the boundary (tail budget of a
    /// possibly-truncated member plus ring slack), reported so sharp
    /// and vacuous passes can be told apart.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<T>,
}

impl<T: Real> VerificationReport<T> {
    pub fn strip_grid(mut self) -> Self {
        self.grid = None;
        self
    }
}

fn reject_hull_boundary<T: Real>(f: &HarmonicSeries<T>) -> Result<()> {
    if f.is_hull_boundary() {
        return Err(Error::HullBoundary);
    }
    Ok(())
}

/// Minimum over the grid of `Re(D^{m+1} f / D^m f)`; passes when the
/// minimum stays above `alpha - tol`. Grid points where the denominator
/// modulus drops below the division guard are reported as their own
/// failure kind instead of being divided through.
pub fn verify_ratio_condition<T: Real>(
    f: &HarmonicSeries<T>,
    p: &ClassParams<T>,
    grid: &GridSpec<T>,
    tol: T,
) -> Result<VerificationReport<T>> {
    reject_hull_boundary(f)?;
    let num = salagean_q_harmonic(f, p.q, p.m + 1);
    let den = salagean_q_harmonic(f, p.q, p.m);
    let guard = real::<T>(DIVISION_GUARD);

    let mut min_re = T::infinity();
    let mut arg = Complex::new(T::zero(), T::zero());
    for z in grid.points() {
        let d = den.eval(z);
        if d.norm() < guard {
            return Ok(VerificationReport {
                check: CheckKind::RatioCondition,
                pass: false,
                extremum: if min_re.is_finite() {
                    min_re
                } else {
                    T::zero()
                },
                witness: Some(Witness::point(z)),
                grid: Some(grid.clone()),
                tol,
                failure_kind: Some(FailureKind::DegenerateDenominator),
                jacobian_min: None,
                slack: None,
            });
        }
        let ratio_re = (num.eval(z) / d).re;
        if ratio_re < min_re {
            min_re = ratio_re;
            arg = z;
        }
    }
    let pass = min_re >= p.alpha - tol;
    Ok(VerificationReport {
        check: CheckKind::RatioCondition,
        pass,
        extremum: min_re,
        witness: (!pass).then(|| Witness::point(arg)),
        grid: Some(grid.clone()),
        tol,
        failure_kind: (!pass).then_some(FailureKind::BoundViolated),
        jacobian_min: None,
        slack: None,
    })
}

/// Maximum over the grid of the dilatation `|g'/h'|`, plus the minimum
/// Jacobian `|h'|^2 - |g'|^2`; passes when the maximum stays strictly
/// below 1. A vanishing `h'` at a grid point is an immediate failure.
pub fn verify_sense_preserving<T: Real>(
    f: &HarmonicSeries<T>,
    grid: &GridSpec<T>,
) -> Result<VerificationReport<T>> {
    reject_hull_boundary(f)?;
    let hp = derivative(f.h());
    let gp = derivative(f.g());
    let guard = real::<T>(DIVISION_GUARD);

    let mut max_dil = T::neg_infinity();
    let mut min_jac = T::infinity();
    let mut arg = Complex::new(T::zero(), T::zero());
    for z in grid.points() {
        let hv = hp.eval(z);
        let gv = gp.eval(z);
        let hn = hv.norm();
        if hn < guard {
            return Ok(VerificationReport {
                check: CheckKind::SensePreserving,
                pass: false,
                extremum: if max_dil.is_finite() {
                    max_dil
                } else {
                    T::zero()
                },
                witness: Some(Witness::point(z)),
                grid: Some(grid.clone()),
                tol: T::zero(),
                failure_kind: Some(FailureKind::CriticalPoint),
                jacobian_min: Some(T::zero()),
                slack: None,
            });
        }
        let dil = gv.norm() / hn;
        if dil > max_dil {
            max_dil = dil;
            arg = z;
        }
        let jac = hv.norm_sqr() - gv.norm_sqr();
        if jac < min_jac {
            min_jac = jac;
        }
    }
    let pass = max_dil < T::one();
    Ok(VerificationReport {
        check: CheckKind::SensePreserving,
        pass,
        extremum: max_dil,
        witness: (!pass).then(|| Witness::point(arg)),
        grid: Some(grid.clone()),
        tol: T::zero(),
        failure_kind: (!pass).then_some(FailureKind::BoundViolated),
        jacobian_min: Some(min_jac),
        slack: None,
    })
}

/// Minimum difference quotient `|f(z_i) - f(z_j)| / |z_i - z_j|` over
/// distinct pairs of a decimated sub-grid. Evidence of injectivity, not
/// proof: a finite sample cannot distinguish a collision from its
/// absence on the grid.
pub fn verify_injectivity_sampled<T: Real>(
    f: &HarmonicSeries<T>,
    grid: &GridSpec<T>,
    tol: T,
) -> Result<VerificationReport<T>> {
    reject_hull_boundary(f)?;
    let sub = grid.decimated(12, 24);
    let pts: Vec<(Complex<T>, Complex<T>)> = sub.points().map(|z| (z, f.eval(z))).collect();

    let mut min_q = T::infinity();
    let mut arg = Complex::new(T::zero(), T::zero());
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let dz = (pts[i].0 - pts[j].0).norm();
            if dz.is_zero() {
                continue;
            }
            let quotient = (pts[i].1 - pts[j].1).norm() / dz;
            if quotient < min_q {
                min_q = quotient;
                arg = pts[i].0;
            }
        }
    }
    let pass = min_q > tol;
    Ok(VerificationReport {
        check: CheckKind::InjectivitySampled,
        pass,
        extremum: min_q,
        witness: (!pass).then(|| Witness::point(arg)),
        grid: Some(sub),
        tol,
        failure_kind: (!pass).then_some(FailureKind::BoundViolated),
        jacobian_min: None,
        slack: None,
    })
}

/// Coefficient magnitudes tagged with their 1-based index.
type IndexedMagnitudes<T> = Vec<(u32, T)>;

/// Restricted coefficient magnitudes `(a_n)_{n>=2}` and `(b_n)_{n>=1}`.
fn restricted_magnitudes<T: Real>(
    f: &HarmonicSeries<T>,
) -> (IndexedMagnitudes<T>, IndexedMagnitudes<T>) {
    let mut a = Vec::new();
    for n in 2..=f.order() {
        let v = -f.h().coeff(n).re;
        if v != T::zero() {
            a.push((n as u32, v));
        }
    }
    let mut b = Vec::new();
    for n in 1..=f.order() {
        let v = f.g().coeff(n).re;
        if v != T::zero() {
            b.push((n as u32, v));
        }
    }
    (a, b)
}

/// Scan the positive real axis for the smallest sampled radius where
/// the membership quotient
/// `(1-alpha) - sum w_a(n) a_n r^(n-1) - sum w_b(n) b_n r^(n-1)` over
/// `1 - sum [n]^m a_n r^(n-1) + sum [n]^m b_n r^(n-1)`
/// turns negative. Requires a restricted input with negative margin;
/// returns `None` when no sampled radius exhibits the sign change.
pub fn necessity_witness<T: Real>(
    f: &HarmonicSeries<T>,
    p: &ClassParams<T>,
    r_grid: &[T],
) -> Result<Option<T>> {
    let report = is_member_restricted(f, p)?;
    if report.margin >= T::zero() {
        return Err(Error::MarginNotNegative(
            report.margin.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let (a, b) = restricted_magnitudes(f);
    for &r in r_grid {
        if r <= T::zero() || r >= T::one() {
            return Err(Error::RadiusOutOfRange(r.to_f64().unwrap_or(f64::NAN)));
        }
        let mut num = p.budget();
        let mut den = T::one();
        for &(n, an) in &a {
            let rp = r.powi(n as i32 - 1);
            num = num - p.weight_analytic(n) * an * rp;
            den = den - q_bracket_pow(n, p.q, p.m) * an * rp;
        }
        for &(n, bn) in &b {
            let rp = r.powi(n as i32 - 1);
            num = num - p.weight_co_analytic(n) * bn * rp;
            den = den + q_bracket_pow(n, p.q, p.m) * bn * rp;
        }
        if num * den < T::zero() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Default radius scan for the necessity witness: 2048 radii from 0.01
/// toward the boundary, geometric in (1 - r).
pub fn default_necessity_radii<T: Real>() -> Vec<T> {
    let count = 2048usize;
    let one = T::one();
    let r_min = real::<T>(0.01);
    let r_max = one - real::<T>(1e-5);
    let gamma = ((one - r_max) / (one - r_min)).powf(one / real::<T>((count - 1) as f64));
    (0..count)
        .map(|k| one - (one - r_min) * gamma.powi(k as i32))
        .collect()
}

/// Budget left for coefficients beyond the stored truncation order of a
/// class member with the given margin, evaluated as a tail bound on
/// |f| at radius r. Zero for margin-zero members: their tails are
/// pinned by the exhausted budget.
pub fn truncation_slack<T: Real>(p: &ClassParams<T>, order: usize, margin: T, r: T) -> T {
    if margin <= T::zero() {
        return T::zero();
    }
    let k = (order + 1) as u32;
    // Functional weights increase with the index, so the analytic
    // weight at the first untruncated index bounds every later one.
    let w_min = p.weight_analytic(k);
    let geo = r.powi(k as i32) / (T::one() - r);
    margin / w_min * geo
}

/// How much the lower distortion envelope can move between the sampled
/// ring and the boundary.
pub fn ring_slack<T: Real>(p: &ClassParams<T>, b1: T, ring_radius: T) -> T {
    let bracket = distortion_bracket(p, b1, B1Factor::Printed).abs();
    let gap = T::one() - ring_radius;
    (T::one() - b1) * gap + bracket * (T::one() - ring_radius * ring_radius)
}

const NEAR_BOUNDARY: f64 = 0.99;

/// Sample |f| on circles of the given radii and check the two-sided
/// distortion envelope, with the b1 value read from the series. Radii
/// beyond 0.99 receive the truncation-tail allowance.
pub fn verify_distortion<T: Real>(
    f: &HarmonicSeries<T>,
    p: &ClassParams<T>,
    radii: &[T],
    angles_per_ring: usize,
    tol: T,
) -> Result<VerificationReport<T>> {
    let report = is_member_restricted(f, p)?;
    if report.margin < -real::<T>(MEMBER_GATE_TOL) {
        return Err(Error::NotMember(report.margin.to_f64().unwrap_or(f64::NAN)));
    }
    let margin = report.margin.max(T::zero());
    let b1 = f.b1();
    let two_pi = T::PI() + T::PI();
    let near = real::<T>(NEAR_BOUNDARY);

    let mut worst_excess = T::neg_infinity();
    let mut arg = Complex::new(T::zero(), T::zero());
    let mut max_slack = T::zero();
    for &r in radii {
        let bound = distortion_bounds(p, b1, r)?;
        let slack = if r > near {
            truncation_slack(p, f.order(), margin, r)
        } else {
            T::zero()
        };
        if slack > max_slack {
            max_slack = slack;
        }
        for j in 0..angles_per_ring {
            let theta = two_pi * real::<T>(j as f64) / real::<T>(angles_per_ring as f64);
            let z = Complex::from_polar(r, theta);
            let v = f.eval(z).norm();
            let excess = (bound.lower - slack - v).max(v - bound.upper - slack);
            if excess > worst_excess {
                worst_excess = excess;
                arg = z;
            }
        }
    }
    let pass = worst_excess <= tol;
    Ok(VerificationReport {
        check: CheckKind::Distortion,
        pass,
        extremum: worst_excess,
        witness: (!pass).then(|| Witness::point(arg)),
        grid: None,
        tol,
        failure_kind: (!pass).then_some(FailureKind::BoundViolated),
        jacobian_min: None,
        slack: Some(max_slack),
    })
}

/// Minimum modulus of f on a near-boundary ring against the covering
/// radius. A necessary-condition check: for a sense-preserving member
/// the image of the sub-disc contains the disc of the sampled minimum
/// modulus, so falling short of the covering radius beyond the slack
/// flags a genuine violation.
pub fn verify_covering<T: Real>(
    f: &HarmonicSeries<T>,
    p: &ClassParams<T>,
    ring_radius: T,
    angles: usize,
    tol: T,
) -> Result<VerificationReport<T>> {
    let report = is_member_restricted(f, p)?;
    if report.margin < -real::<T>(MEMBER_GATE_TOL) {
        return Err(Error::NotMember(report.margin.to_f64().unwrap_or(f64::NAN)));
    }
    if ring_radius <= T::zero() || ring_radius >= T::one() {
        return Err(Error::RadiusOutOfRange(
            ring_radius.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let b1 = f.b1();
    let covering = covering_radius(p, b1)?;
    let slack = ring_slack(p, b1, ring_radius)
        + truncation_slack(p, f.order(), report.margin.max(T::zero()), ring_radius);
    let two_pi = T::PI() + T::PI();

    let mut min_mod = T::infinity();
    let mut arg = Complex::new(T::zero(), T::zero());
    for j in 0..angles {
        let theta = two_pi * real::<T>(j as f64) / real::<T>(angles as f64);
        let z = Complex::from_polar(ring_radius, theta);
        let v = f.eval(z).norm();
        if v < min_mod {
            min_mod = v;
            arg = z;
        }
    }
    let pass = min_mod >= covering - slack - tol;
    Ok(VerificationReport {
        check: CheckKind::Covering,
        pass,
        extremum: min_mod,
        witness: (!pass).then(|| Witness::point(arg)),
        grid: None,
        tol,
        failure_kind: (!pass).then_some(FailureKind::BoundViolated),
        jacobian_min: None,
        slack: Some(slack),
    })
}

/// The order-zero operator is the identity: the maximum deviation over
/// the grid must be exactly zero, bit for bit.
pub fn verify_reduction_m0<T: Real>(
    f: &HarmonicSeries<T>,
    q: QParam<T>,
    grid: &GridSpec<T>,
) -> VerificationReport<T> {
    let image = salagean_q_harmonic(f, q, 0);
    let mut max_dev = T::zero();
    let mut arg = None;
    for z in grid.points() {
        let dev = (image.eval(z) - f.eval(z)).norm();
        if dev > max_dev {
            max_dev = dev;
            arg = Some(z);
        }
    }
    let pass = max_dev == T::zero();
    VerificationReport {
        check: CheckKind::ReductionIdentity,
        pass,
        extremum: max_dev,
        witness: if pass { None } else { arg.map(Witness::point) },
        grid: Some(grid.clone()),
        tol: T::zero(),
        failure_kind: (!pass).then_some(FailureKind::BoundViolated),
        jacobian_min: None,
        slack: None,
    }
}

/// Per-q row of the classical-limit table: the largest absolute
/// coefficient error `|[n]^m - n^m| |c_n|` and where it occurs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionRow<T> {
    pub q: T,
    pub max_abs_error: T,
    pub worst_index: u32,
}

fn validate_q_sequence<T: Real>(q_seq: &[T]) -> Result<()> {
    if q_seq.is_empty() {
        return Err(Error::BadQSequence);
    }
    for w in q_seq.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadQSequence);
        }
    }
    if q_seq[0] <= T::zero() || *q_seq.last().unwrap() >= T::one() {
        return Err(Error::BadQSequence);
    }
    Ok(())
}

/// Coefficient errors of the operator against its classical limit
/// (`[n]^m c_n` against `n^m c_n`), per q in the sequence.
pub fn reduction_q1_errors<T: Real>(
    s: &AnalyticSeries<T>,
    m: u32,
    q_seq: &[T],
) -> Result<Vec<ReductionRow<T>>> {
    validate_q_sequence(q_seq)?;
    q_seq
        .iter()
        .map(|&qv| {
            let q = QParam::new(qv)?;
            let mut max_err = T::zero();
            let mut worst = 1u32;
            for n in 1..=s.order() as u32 {
                let c = s.coeff(n as usize).norm();
                if c.is_zero() {
                    continue;
                }
                let classical = real::<T>(n as f64).powi(m as i32);
                let err = (q_bracket_pow(n, q, m) - classical).abs() * c;
                if err > max_err {
                    max_err = err;
                    worst = n;
                }
            }
            Ok(ReductionRow {
                q: qv,
                max_abs_error: max_err,
                worst_index: worst,
            })
        })
        .collect()
}

/// Envelope for the coefficient error at one index:
/// `m n^m (n-1)(1-q)/2 |c_n|`, from the term-by-term bound
/// `n - [n]_q <= n(n-1)(1-q)/2` pushed through the m-th power.
fn classical_error_envelope<T: Real>(n: u32, m: u32, q: T, c: T) -> T {
    let nf = real::<T>(n as f64);
    real::<T>(m as f64) * nf.powi(m as i32) * (nf - T::one()) * (T::one() - q) / real::<T>(2.0) * c
}

/// Check that coefficient errors shrink monotonically along an
/// increasing q sequence and that the final errors sit inside the
/// derivative-based envelope.
pub fn verify_reduction_q1<T: Real>(
    s: &AnalyticSeries<T>,
    m: u32,
    q_seq: &[T],
    tol: T,
) -> Result<VerificationReport<T>> {
    let rows = reduction_q1_errors(s, m, q_seq)?;
    // Witness coordinate for a failure is the offending q value.
    let mut broke_at = None;
    for w in rows.windows(2) {
        if w[1].max_abs_error > w[0].max_abs_error + tol {
            broke_at = Some(w[1].q);
            break;
        }
    }
    let monotone = broke_at.is_none();

    let q_last = *q_seq.last().unwrap();
    let q = QParam::new(q_last)?;
    let mut within_envelope = true;
    for n in 1..=s.order() as u32 {
        let c = s.coeff(n as usize).norm();
        if c.is_zero() {
            continue;
        }
        let classical = real::<T>(n as f64).powi(m as i32);
        let err = (q_bracket_pow(n, q, m) - classical).abs() * c;
        if err > classical_error_envelope(n, m, q_last, c) + tol {
            within_envelope = false;
        }
    }

    let final_err = rows.last().unwrap().max_abs_error;
    let pass = monotone && within_envelope;
    let witness = if pass {
        None
    } else {
        Some(Witness::Radius {
            r0: broke_at.unwrap_or(q_last),
        })
    };
    Ok(VerificationReport {
        check: CheckKind::ReductionClassicalLimit,
        pass,
        extremum: final_err,
        witness,
        grid: None,
        tol,
        failure_kind: if pass {
            None
        } else if monotone {
            Some(FailureKind::BoundViolated)
        } else {
            Some(FailureKind::NonMonotone)
        },
        jacobian_min: None,
        slack: None,
    })
}

/// One row of the b1-factor comparison: a two-term margin-zero member
/// (b1 plus one soaking coefficient) sampled against the primary and
/// variant envelopes and the covering radius.
#[derive(Clone, Debug, Serialize)]
pub struct B1ComparisonRow {
    pub q: f64,
    pub m: u32,
    pub alpha: f64,
    pub b1: f64,
    pub r: f64,
    /// Which coefficient soaks the remaining budget: "a2" or "b2".
    pub family: &'static str,
    pub lower_printed: f64,
    pub lower_variant: f64,
    pub min_modulus: f64,
    pub upper_printed: f64,
    pub upper_variant: f64,
    pub max_modulus: f64,
    pub covering_printed: f64,
    pub lower_limit_printed: f64,
    pub upper_violation: f64,
    pub lower_violation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct B1ComparisonReport {
    pub rows: Vec<B1ComparisonRow>,
    pub tol: f64,
    pub any_printed_violation: bool,
    pub worst_upper_violation: f64,
    pub worst_lower_violation: f64,
}

/// Grid-search oracle for the b1 dependence of the closed-form bounds.
///
/// For a sweep of parameters and b1 values, builds the two-term
/// margin-zero members, scans |f| over circles, and tabulates the
/// sampled extrema against the primary and variant envelopes and the
/// covering radius. Violations of the primary bounds beyond the
/// tolerance are flagged, never silently corrected.
pub fn b1_factor_comparison(angles: usize, tol: f64) -> B1ComparisonReport {
    use crate::series::CoSign;

    let qs = [0.3, 0.5, 0.7, 0.9];
    let ms = [0u32, 1, 2];
    let alphas = [0.0, 0.25, 0.5];
    let b1_fractions = [0.25, 0.5, 0.75];
    let radii = [0.25, 0.5, 0.9, 0.999];

    let mut rows = Vec::new();
    let mut worst_upper = f64::NEG_INFINITY;
    let mut worst_lower = f64::NEG_INFINITY;

    for &qv in &qs {
        for &m in &ms {
            for &alpha in &alphas {
                let p = ClassParams::from_parts(qv, m, alpha).expect("sweep params are valid");
                for &frac in &b1_fractions {
                    // b1 can use at most (1-alpha)/(1+alpha) of the budget.
                    let b1 = frac * p.budget() / (1.0 + alpha);
                    let rest = p.budget() - p.weight_co_analytic(1) * b1;
                    for family in ["a2", "b2"] {
                        let order = 4;
                        let mut h_tail = vec![Complex::new(0.0, 0.0); order];
                        h_tail[0] = Complex::new(1.0, 0.0);
                        let mut g_tail = vec![Complex::new(0.0, 0.0); order];
                        g_tail[0] = Complex::new(b1, 0.0);
                        if family == "a2" {
                            h_tail[1] = Complex::new(-rest / p.weight_analytic(2), 0.0);
                        } else {
                            g_tail[1] = Complex::new(rest / p.weight_co_analytic(2), 0.0);
                        }
                        let f = HarmonicSeries::with_co_sign(
                            AnalyticSeries::from_tail(h_tail).expect("nonempty"),
                            AnalyticSeries::from_tail(g_tail).expect("nonempty"),
                            CoSign::from_operator_order(m),
                        )
                        .expect("two-term members satisfy the invariants");

                        for &r in &radii {
                            let printed = distortion_bounds(&p, b1, r).expect("b1 and r in range");
                            let variant =
                                crate::bounds::distortion_bounds_with(&p, b1, r, B1Factor::Variant)
                                    .expect("b1 and r in range");
                            let two_pi = std::f64::consts::TAU;
                            let mut min_mod = f64::INFINITY;
                            let mut max_mod = f64::NEG_INFINITY;
                            for j in 0..angles {
                                let theta = two_pi * j as f64 / angles as f64;
                                let v = f.eval(Complex::from_polar(r, theta)).norm();
                                min_mod = min_mod.min(v);
                                max_mod = max_mod.max(v);
                            }
                            let upper_violation = max_mod - printed.upper;
                            let lower_violation = printed.lower - min_mod;
                            worst_upper = worst_upper.max(upper_violation);
                            worst_lower = worst_lower.max(lower_violation);
                            rows.push(B1ComparisonRow {
                                q: qv,
                                m,
                                alpha,
                                b1,
                                r,
                                family,
                                lower_printed: printed.lower,
                                lower_variant: variant.lower,
                                min_modulus: min_mod,
                                upper_printed: printed.upper,
                                upper_variant: variant.upper,
                                max_modulus: max_mod,
                                covering_printed: covering_radius(&p, b1).expect("b1 in range"),
                                lower_limit_printed: crate::bounds::lower_bound_limit(
                                    &p,
                                    b1,
                                    B1Factor::Printed,
                                )
                                .expect("b1 in range"),
                                upper_violation,
                                lower_violation,
                            });
                        }
                    }
                }
            }
        }
    }
    B1ComparisonReport {
        any_printed_violation: worst_upper > tol || worst_lower > tol,
        worst_upper_violation: worst_upper,
        worst_lower_violation: worst_lower,
        rows,
        tol,
    }
}
