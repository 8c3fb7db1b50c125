//! Seeded random generators for the property sweeps: class parameters,
//! margin-positive members, hull members, and over-budget restricted
//! series. Everything is driven by a counter-based stream cipher RNG so
//! identical seeds reproduce identical sweeps byte for byte.

use crate::classes::{convex_combination, ConvexWeights, ExtremalWeights};
use crate::error::Result;
use crate::qcore::ClassParams;
use crate::series::{AnalyticSeries, CoSign, HarmonicSeries};
use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SweepRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random parameters over the sweep ranges: q in (0.05, 0.95),
/// m in 0..=4, alpha in [0, 0.9].
pub fn random_class_params(rng: &mut SweepRng) -> ClassParams<f64> {
    let q = rng.random_range(0.05..0.95);
    let m = rng.random_range(0..=4u32);
    let alpha = rng.random_range(0.0..0.9);
    ClassParams::from_parts(q, m, alpha).expect("ranges are valid")
}

fn distinct_indices(rng: &mut SweepRng, count: usize, lo: u32, hi: u32) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::with_capacity(count);
    while out.len() < count && (out.len() as u32) < hi - lo + 1 {
        let n = rng.random_range(lo..=hi);
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out.sort_unstable();
    out
}

fn random_unit_complex(rng: &mut SweepRng) -> Complex<f64> {
    let phase = rng.random_range(0.0..std::f64::consts::TAU);
    let modulus = rng.random_range(0.05..1.0);
    Complex::from_polar(modulus, phase)
}

/// A member certified by a nonnegative coefficient margin: random
/// sparse complex coefficients scaled so the functional uses a random
/// fraction of the budget.
pub fn random_margin_positive(
    rng: &mut SweepRng,
    p: &ClassParams<f64>,
    max_index: u32,
) -> HarmonicSeries<f64> {
    let order = max_index as usize;
    let n_a = rng.random_range(1..=4usize);
    let n_b = rng.random_range(0..=3usize);
    let a_idx = distinct_indices(rng, n_a, 2, max_index);
    let b_idx = distinct_indices(rng, n_b, 1, max_index);

    let mut h_tail = vec![Complex::new(0.0, 0.0); order];
    h_tail[0] = Complex::new(1.0, 0.0);
    let mut g_tail = vec![Complex::new(0.0, 0.0); order];
    let mut raw_functional = 0.0;
    let mut draws: Vec<(bool, u32, Complex<f64>)> = Vec::new();
    for &n in &a_idx {
        let v = random_unit_complex(rng);
        raw_functional += p.weight_analytic(n) * v.norm();
        draws.push((true, n, v));
    }
    for &n in &b_idx {
        let v = random_unit_complex(rng);
        raw_functional += p.weight_co_analytic(n) * v.norm();
        draws.push((false, n, v));
    }
    let used_fraction = rng.random_range(0.0..0.999);
    let scale = if raw_functional > 0.0 {
        used_fraction * p.budget() / raw_functional
    } else {
        0.0
    };
    for (is_analytic, n, v) in draws {
        if is_analytic {
            h_tail[n as usize - 1] = v * scale;
        } else {
            g_tail[n as usize - 1] = v * scale;
        }
    }
    HarmonicSeries::new(
        AnalyticSeries::from_tail(h_tail).expect("nonempty"),
        AnalyticSeries::from_tail(g_tail).expect("nonempty"),
    )
    .expect("scaled coefficients satisfy the invariants")
}

/// Random nonnegative hull weights with the given support cap;
/// `zero_y1` suppresses the Y_1 component so b1 = 0.
pub fn random_convex_weights(
    rng: &mut SweepRng,
    max_index: u32,
    zero_y1: bool,
) -> ConvexWeights<f64> {
    let n_x = rng.random_range(1..=3usize);
    let n_y = rng.random_range(0..=2usize);
    let x_idx = distinct_indices(rng, n_x, 1, max_index);
    let y_lo = if zero_y1 { 2 } else { 1 };
    let y_idx = if max_index >= y_lo {
        distinct_indices(rng, n_y, y_lo, max_index)
    } else {
        Vec::new()
    };

    let mut x: Vec<(u32, f64)> = x_idx
        .into_iter()
        .map(|n| (n, rng.random_range(0.01..1.0)))
        .collect();
    let mut y: Vec<(u32, f64)> = y_idx
        .into_iter()
        .map(|n| (n, rng.random_range(0.01..1.0)))
        .collect();
    let sum: f64 = x
        .iter()
        .map(|&(_, v)| v)
        .chain(y.iter().map(|&(_, v)| v))
        .sum();
    for (_, v) in x.iter_mut().chain(y.iter_mut()) {
        *v /= sum;
    }
    ConvexWeights::new(x, y).expect("normalized weights are valid")
}

/// Random hull member built as a convex combination of extreme points.
pub fn random_hull_member(
    rng: &mut SweepRng,
    p: &ClassParams<f64>,
    max_index: u32,
    zero_b1: bool,
) -> HarmonicSeries<f64> {
    let w = random_convex_weights(rng, max_index, zero_b1);
    convex_combination(p, &w, max_index as usize).expect("support fits the order")
}

/// Random complex extremal weights normalized so the moduli sum to 1.
pub fn random_extremal_weights(rng: &mut SweepRng, max_index: u32) -> ExtremalWeights<f64> {
    let n_x = rng.random_range(0..=3usize);
    let n_y = rng.random_range(0..=2usize);
    let mut x_idx = distinct_indices(rng, n_x, 2, max_index);
    let y_idx = distinct_indices(rng, n_y, 1, max_index);
    if x_idx.is_empty() && y_idx.is_empty() {
        x_idx.push(2);
    }
    let mut x: Vec<(u32, Complex<f64>)> = x_idx
        .into_iter()
        .map(|n| (n, random_unit_complex(rng)))
        .collect();
    let mut y: Vec<(u32, Complex<f64>)> = y_idx
        .into_iter()
        .map(|n| (n, random_unit_complex(rng)))
        .collect();
    let sum: f64 = x
        .iter()
        .map(|(_, v)| v.norm())
        .chain(y.iter().map(|(_, v)| v.norm()))
        .sum();
    for (_, v) in x.iter_mut().chain(y.iter_mut()) {
        *v /= sum;
    }
    ExtremalWeights::new(x, y).expect("normalized weights are valid")
}

/// Restricted-form series that overshoots the coefficient budget by a
/// factor in `[min_overshoot, max_overshoot]`, with the co-analytic
/// sign matching the operator order. Draws are rejected until the
/// leading co-analytic coefficient stays clear of the unit bound.
pub fn random_restricted_overbudget(
    rng: &mut SweepRng,
    p: &ClassParams<f64>,
    max_index: u32,
    min_overshoot: f64,
    max_overshoot: f64,
) -> Result<HarmonicSeries<f64>> {
    loop {
        let order = max_index as usize;
        let n_a = rng.random_range(1..=3usize);
        let n_b = rng.random_range(0..=2usize);
        let a_idx = distinct_indices(rng, n_a, 2, max_index);
        let b_idx = distinct_indices(rng, n_b, 1, max_index);

        let mut a: Vec<(u32, f64)> = a_idx
            .into_iter()
            .map(|n| (n, rng.random_range(0.05..1.0)))
            .collect();
        let mut b: Vec<(u32, f64)> = b_idx
            .into_iter()
            .map(|n| (n, rng.random_range(0.05..1.0)))
            .collect();
        let raw: f64 = a
            .iter()
            .map(|&(n, v)| p.weight_analytic(n) * v)
            .chain(b.iter().map(|&(n, v)| p.weight_co_analytic(n) * v))
            .sum();
        let overshoot = rng.random_range(min_overshoot..=max_overshoot);
        let scale = overshoot * p.budget() / raw;
        for (_, v) in a.iter_mut().chain(b.iter_mut()) {
            *v *= scale;
        }
        if b.iter().any(|&(n, v)| n == 1 && v >= 0.98) {
            continue;
        }

        let mut h_tail = vec![Complex::new(0.0, 0.0); order];
        h_tail[0] = Complex::new(1.0, 0.0);
        for &(n, v) in &a {
            h_tail[n as usize - 1] = Complex::new(-v, 0.0);
        }
        let mut g_tail = vec![Complex::new(0.0, 0.0); order];
        for &(n, v) in &b {
            g_tail[n as usize - 1] = Complex::new(v, 0.0);
        }
        return HarmonicSeries::with_co_sign(
            AnalyticSeries::from_tail(h_tail)?,
            AnalyticSeries::from_tail(g_tail)?,
            CoSign::from_operator_order(p.m),
        );
    }
}
