//! Property tests for the algebraic invariants: the two q-integer
//! evaluation routes, operator linearity, sharpness of the extremal
//! construction, the hull identity, and the classical-limit envelope.

use num_complex::Complex;
use proptest::prelude::*;
use qharm_core::classes::{
    coefficient_functional, convex_combination, extremal_function, is_member_restricted,
};
use qharm_core::qcore::{q_bracket, ClassParams, QParam};
use qharm_core::series::{salagean_q, AnalyticSeries};
use qharm_core::sweep::{
    random_class_params, random_convex_weights, random_extremal_weights,
    random_restricted_overbudget, rng_from_seed,
};
use qharm_core::verify::{default_necessity_radii, necessity_witness};

type C = Complex<f64>;

/// Ratio-form oracle evaluated cancellation-safely through expm1, so it
/// stays accurate to a few ulps even at q = 0.9999.
fn bracket_ratio_oracle(n: u32, q: f64) -> f64 {
    -f64::exp_m1(n as f64 * q.ln()) / (1.0 - q)
}

fn ulps_apart(a: f64, b: f64) -> f64 {
    (a - b).abs() / (f64::EPSILON * a.abs().max(b.abs()))
}

fn complex_strategy(cap: f64) -> impl Strategy<Value = C> {
    (0.0..cap, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| C::from_polar(r, t))
}

fn series_strategy(max_order: usize) -> impl Strategy<Value = AnalyticSeries<f64>> {
    prop::collection::vec(complex_strategy(2.0), 1..=max_order)
        .prop_map(|tail| AnalyticSeries::from_tail(tail).unwrap())
}

proptest! {
    #[test]
    fn bracket_summation_matches_ratio_oracle(n in 1u32..=256, q in 0.01f64..0.999) {
        let qp = QParam::new(q).unwrap();
        let summed = q_bracket(n, qp);
        let ratio = bracket_ratio_oracle(n, q);
        prop_assert!(ulps_apart(summed, ratio) <= 8.0,
            "n={n} q={q}: {summed} vs {ratio} ({} ulps)", ulps_apart(summed, ratio));
    }

    #[test]
    fn bracket_fixed_q_pins(n in 1u32..=256) {
        for &q in &[0.1, 0.5, 0.9, 0.99, 0.9999] {
            let qp = QParam::new(q).unwrap();
            prop_assert!(ulps_apart(q_bracket(n, qp), bracket_ratio_oracle(n, q)) <= 8.0);
        }
    }

    #[test]
    fn bracket_monotone_in_n(n in 1u32..=200, q in 0.01f64..0.999) {
        let qp = QParam::new(q).unwrap();
        let lo = q_bracket(n, qp);
        let hi = q_bracket(n + 1, qp);
        prop_assert!(hi >= lo);
        // The analytic increment is q^n; strictness is only observable
        // while it clears the float resolution of the running sum.
        if q.powi(n as i32) > 4.0 * f64::EPSILON * hi {
            prop_assert!(hi > lo, "n={n} q={q}");
        }
    }

    #[test]
    fn bracket_limit_envelope(n in 1u32..=64, gap in 1e-9f64..0.2) {
        let q = 1.0 - gap;
        let qp = QParam::new(q).unwrap();
        let nf = n as f64;
        let envelope = nf * (nf - 1.0) * gap / 2.0 + 1e-12;
        prop_assert!((q_bracket(n, qp) - nf).abs() <= envelope);
    }

    #[test]
    fn operator_is_linear(
        s1 in series_strategy(12),
        s2 in series_strategy(12),
        a in complex_strategy(2.0),
        b in complex_strategy(2.0),
        q in 0.05f64..0.95,
        m in 0u32..=4,
    ) {
        let qp = QParam::new(q).unwrap();
        let order = s1.order().max(s2.order());
        let combined = AnalyticSeries::from_tail(
            (1..=order).map(|n| s1.coeff(n) * a + s2.coeff(n) * b).collect(),
        ).unwrap();
        let lhs = salagean_q(&combined, qp, m);
        let r1 = salagean_q(&s1, qp, m);
        let r2 = salagean_q(&s2, qp, m);
        for n in 1..=order {
            let rhs = r1.coeff(n) * a + r2.coeff(n) * b;
            let scale = 1.0 + rhs.norm();
            prop_assert!((lhs.coeff(n) - rhs).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn operator_classical_limit_relative_error(s in series_strategy(16), m in 0u32..=4) {
        let gap = 1e-6;
        let qp = QParam::new(1.0 - gap).unwrap();
        let out = salagean_q(&s, qp, m);
        let order = s.order() as f64;
        for n in 1..=s.order() {
            let classical = (n as f64).powi(m as i32) * s.coeff(n).norm();
            if classical == 0.0 { continue; }
            let err = (out.coeff(n).norm() - classical).abs();
            prop_assert!(err <= (m as f64) * order * order * gap * classical + 1e-12,
                "n={n} m={m}: err {err} vs classical {classical}");
        }
    }

    #[test]
    fn extremal_functions_sit_on_the_budget(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = random_class_params(&mut rng);
        let w = random_extremal_weights(&mut rng, 16);
        let f = extremal_function(&p, &w, 16).unwrap();
        let rep = coefficient_functional(&f, &p);
        prop_assert!(rep.margin.abs() <= 1e-10, "margin {}", rep.margin);
    }

    #[test]
    fn hull_members_satisfy_the_identity_margin(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = random_class_params(&mut rng);
        let w = random_convex_weights(&mut rng, 16, false);
        let f = convex_combination(&p, &w, 16).unwrap();
        let rep = is_member_restricted(&f, &p).unwrap();
        let expected = p.budget() * (1.0 - w.identity_weight());
        prop_assert!((rep.functional_value - expected).abs() <= 1e-10,
            "functional {} vs identity value {expected}", rep.functional_value);
        prop_assert!(rep.margin >= -1e-12);
    }

    #[test]
    fn functional_strictly_increases_in_any_modulus(
        seed in any::<u64>(),
        bump in 1e-6f64..0.1,
    ) {
        let mut rng = rng_from_seed(seed);
        let p = random_class_params(&mut rng);
        let w = random_convex_weights(&mut rng, 12, false);
        let f = convex_combination(&p, &w, 12).unwrap();
        let base = coefficient_functional(&f, &p).functional_value;

        // Bump one analytic and one co-analytic modulus in turn.
        let order = f.order();
        let mut h_tail: Vec<C> = (1..=order).map(|n| f.h().coeff(n)).collect();
        h_tail[order - 1] -= C::new(bump, 0.0);
        let bumped = qharm_core::series::HarmonicSeries::new(
            AnalyticSeries::from_tail(h_tail).unwrap(),
            f.g().clone(),
        ).unwrap();
        prop_assert!(coefficient_functional(&bumped, &p).functional_value > base);

        let mut g_tail: Vec<C> = (1..=order).map(|n| f.g().coeff(n)).collect();
        g_tail[0] += C::new(bump.min(0.4), 0.0);
        let bumped = qharm_core::series::HarmonicSeries::new(
            f.h().clone(),
            AnalyticSeries::from_tail(g_tail).unwrap(),
        ).unwrap();
        prop_assert!(coefficient_functional(&bumped, &p).functional_value > base);
    }

    #[test]
    fn overbudget_restricted_members_are_rejected_with_witness(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = random_class_params(&mut rng);
        let f = random_restricted_overbudget(&mut rng, &p, 16, 1.02, 1.25).unwrap();
        let rep = is_member_restricted(&f, &p).unwrap();
        prop_assert!(rep.margin < -0.01 * p.budget());
        let r0 = necessity_witness(&f, &p, &default_necessity_radii()).unwrap();
        prop_assert!(r0.is_some(), "no witness for margin {}", rep.margin);
        let r0 = r0.unwrap();
        prop_assert!(r0 > 0.0 && r0 < 1.0);
    }
}

#[test]
fn zero_order_reduction_matches_m_free_functional() {
    // At operator order zero the functional weights collapse to
    // ([n]-alpha) and ([n]+alpha).
    let mut rng = rng_from_seed(31);
    for _ in 0..50 {
        let mut p = random_class_params(&mut rng);
        p = ClassParams::from_parts(p.q.get(), 0, p.alpha).unwrap();
        let w = random_convex_weights(&mut rng, 12, false);
        let f = convex_combination(&p, &w, 12).unwrap();
        let rep = coefficient_functional(&f, &p);

        let mut direct = 0.0;
        for n in 2..=f.order() {
            direct += (q_bracket(n as u32, p.q) - p.alpha) * f.h().coeff(n).norm();
        }
        for n in 1..=f.order() {
            direct += (q_bracket(n as u32, p.q) + p.alpha) * f.g().coeff(n).norm();
        }
        assert!((rep.functional_value - direct).abs() < 1e-12);
    }
}
