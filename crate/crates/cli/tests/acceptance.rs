//! Acceptance suite. Each test covers one criterion, pins its tolerance
//! in code, and prints one `[PASS]`/`[FAIL]` line. Run with
//! `cargo test -p qharm-cli --test acceptance -- --nocapture` to see
//! the lines.

use num_complex::Complex;
use qharm_core::bounds::{covering_radius, distortion_bounds};
use qharm_core::classes::{
    coefficient_functional, extremal_function, extreme_point_g, extreme_point_h,
    is_member_restricted,
};
use qharm_core::qcore::{ClassParams, QParam};
use qharm_core::series::{salagean_q, salagean_q_harmonic, AnalyticSeries, GridSpec};
use qharm_core::sweep::{
    random_class_params, random_extremal_weights, random_hull_member, random_margin_positive,
    random_restricted_overbudget, rng_from_seed,
};
use qharm_core::verify::{
    b1_factor_comparison, default_necessity_radii, necessity_witness, reduction_q1_errors,
    verify_covering, verify_distortion, verify_injectivity_sampled, verify_ratio_condition,
    verify_reduction_m0, verify_sense_preserving,
};
use rand::Rng;

type C = Complex<f64>;

fn pass(line: &str) {
    println!("[PASS] {line}");
}

fn fail(line: &str) -> String {
    println!("[FAIL] {line}");
    line.to_string()
}

fn random_series(rng: &mut qharm_core::sweep::SweepRng, max_order: usize) -> AnalyticSeries<f64> {
    let order = rng.random_range(1..=max_order);
    let tail: Vec<C> = (0..order)
        .map(|_| {
            C::from_polar(
                rng.random_range(0.0..2.0),
                rng.random_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    AnalyticSeries::from_tail(tail).unwrap()
}

/// Pointwise operator image through nested q-difference quotients of
/// the evaluation closure only.
fn pointwise_operator_eval(s: &AnalyticSeries<f64>, q: f64, m: u32, z: C) -> C {
    if m == 0 {
        return s.eval(z);
    }
    let lower = |w: C| pointwise_operator_eval(s, q, m - 1, w);
    (lower(z) - lower(z * q)) / (1.0 - q)
}

/// Coefficients c_0..c_(k-1) recovered from k circle samples.
fn reconstruct_coeffs(eval: impl Fn(C) -> C, k: usize, rho: f64) -> Vec<C> {
    let tau = std::f64::consts::TAU;
    let samples: Vec<C> = (0..k)
        .map(|j| eval(C::from_polar(rho, tau * j as f64 / k as f64)))
        .collect();
    (0..k)
        .map(|n| {
            let mut acc = C::new(0.0, 0.0);
            for (j, &v) in samples.iter().enumerate() {
                acc += v * C::from_polar(1.0, -tau * (j * n % k) as f64 / k as f64);
            }
            acc / k as f64 * rho.powi(-(n as i32))
        })
        .collect()
}

#[test]
fn criterion_1_operator_oracle() {
    let mut rng = rng_from_seed(101);
    for case in 0..200 {
        let s = random_series(&mut rng, 16);
        let q = rng.random_range(0.05..0.95);
        let m = rng.random_range(0..=4u32);
        let implemented = salagean_q(&s, QParam::new(q).unwrap(), m);
        let oracle =
            reconstruct_coeffs(|z| pointwise_operator_eval(&s, q, m, z), s.order() + 1, 0.9);
        let scale = 1.0 + oracle.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        for (n, &expected) in oracle.iter().enumerate() {
            let err = (implemented.coeff(n) - expected).norm();
            assert!(
                err <= 1e-10 * scale,
                "{}",
                fail(&format!(
                    "criterion 1: operator oracle, case {case} coeff {n} off by {err:.3e} \
                     (q={q}, m={m})"
                ))
            );
        }
    }
    pass("criterion 1: 200 random series match the pointwise reconstruction oracle within 1e-10 relative");
}

#[test]
fn criterion_2_extremal_sharpness() {
    let mut rng = rng_from_seed(202);
    let mut worst = 0.0f64;
    for case in 0..1000 {
        let p = random_class_params(&mut rng);
        let w = random_extremal_weights(&mut rng, 16);
        let f = extremal_function(&p, &w, 16).unwrap();
        let margin = coefficient_functional(&f, &p).margin;
        worst = worst.max(margin.abs());
        assert!(
            margin.abs() <= 1e-10,
            "{}",
            fail(&format!(
                "criterion 2: sharpness, case {case} margin {margin:.3e}"
            ))
        );
    }
    pass(&format!(
        "criterion 2: 1000 random extremal functions stay on the budget (worst |margin| {worst:.3e} <= 1e-10)"
    ));
}

#[test]
fn criterion_3_soundness_sweep() {
    let grid = GridSpec::default_verification();
    let tol = 1e-6;
    let mut rng = rng_from_seed(303);
    let mut failures: Vec<String> = Vec::new();
    for case in 0..500 {
        let p = random_class_params(&mut rng);
        let f = random_margin_positive(&mut rng, &p, 16);

        let ratio = verify_ratio_condition(&f, &p, &grid, tol).unwrap();
        if !ratio.pass {
            failures.push(format!(
                "case {case}: ratio min {:.6} < alpha {:.6} (q={:.4}, m={})",
                ratio.extremum,
                p.alpha,
                p.q.get(),
                p.m
            ));
        }
        let sense = verify_sense_preserving(&f, &grid).unwrap();
        if !sense.pass {
            failures.push(format!(
                "case {case}: max dilatation {:.6}, min jacobian {:.3e} (q={:.4}, m={}, alpha={:.4}, margin {:.4})",
                sense.extremum,
                sense.jacobian_min.unwrap_or(f64::NAN),
                p.q.get(),
                p.m,
                p.alpha,
                coefficient_functional(&f, &p).margin,
            ));
        }
        let inj = verify_injectivity_sampled(&f, &grid, tol).unwrap();
        if !inj.pass {
            failures.push(format!(
                "case {case}: min difference quotient {:.3e}",
                inj.extremum
            ));
        }
    }
    if !failures.is_empty() {
        let preview: Vec<&String> = failures.iter().take(5).collect();
        panic!(
            "{}\nfirst failures:\n{}",
            fail(&format!(
                "criterion 3: soundness sweep has {} failing checks out of 500 members \
                 (coefficient-certified members are not always sense-preserving for q away from 1)",
                failures.len()
            )),
            preview
                .iter()
                .map(|s| format!("  {s}"))
                .collect::<Vec<_>>()
                .join("\n")
        );
    }
    pass("criterion 3: 500 margin-positive members pass ratio, sense, and injectivity checks");
}

#[test]
fn criterion_4_necessity_sweep() {
    let mut rng = rng_from_seed(404);
    let radii = default_necessity_radii::<f64>();
    for case in 0..200 {
        let p = random_class_params(&mut rng);
        let f = random_restricted_overbudget(&mut rng, &p, 16, 1.02, 1.25).unwrap();
        let rep = is_member_restricted(&f, &p).unwrap();
        assert!(
            rep.margin <= -0.01 * p.budget(),
            "generator margin too mild"
        );

        let r0 = necessity_witness(&f, &p, &radii).unwrap();
        let r0 = match r0 {
            Some(r0) if r0 > 0.0 && r0 < 1.0 => r0,
            other => panic!(
                "{}",
                fail(&format!(
                    "criterion 4: case {case} produced no interior witness ({other:?})"
                ))
            ),
        };
        let num = salagean_q_harmonic(&f, p.q, p.m + 1);
        let den = salagean_q_harmonic(&f, p.q, p.m);
        let z = C::new(r0, 0.0);
        let ratio = (num.eval(z) / den.eval(z)).re;
        assert!(
            ratio < p.alpha,
            "{}",
            fail(&format!(
                "criterion 4: case {case} ratio {ratio:.6} at r0 {r0:.6} not below alpha {:.6}",
                p.alpha
            ))
        );
    }
    pass("criterion 4: 200 over-budget restricted members each yield a witness radius where the ratio drops below alpha");
}

#[test]
fn criterion_5_reductions() {
    // Order-zero reduction is bit-exact on a random member.
    let mut rng = rng_from_seed(505);
    let grid = GridSpec::default_verification();
    for _ in 0..20 {
        let p = random_class_params(&mut rng);
        let f = random_margin_positive(&mut rng, &p, 12);
        let rep = verify_reduction_m0(&f, p.q, &grid);
        assert!(
            rep.pass && rep.extremum == 0.0,
            "{}",
            fail(&format!(
                "criterion 5: order-zero reduction deviation {:.3e} is not exactly zero",
                rep.extremum
            ))
        );
    }

    // Classical limit: the n = 2 coefficient error at q = 0.999, m = 1
    // equals 1e-3 within 10%.
    let s = AnalyticSeries::from_tail(vec![C::new(1.0, 0.0), C::new(1.0, 0.0)]).unwrap();
    let rows = reduction_q1_errors(&s, 1, &[0.9, 0.99, 0.999]).unwrap();
    let last = rows.last().unwrap();
    assert!(
        last.worst_index == 2 && (last.max_abs_error - 1e-3).abs() <= 1e-4,
        "{}",
        fail(&format!(
            "criterion 5: classical-limit error {:.6e} at n={} not within 10% of 1e-3",
            last.max_abs_error, last.worst_index
        ))
    );
    assert!(rows[0].max_abs_error > rows[1].max_abs_error);
    assert!(rows[1].max_abs_error > rows[2].max_abs_error);
    pass("criterion 5: order-zero reduction is exactly zero; classical-limit error at (q=0.999, m=1, n=2) is 1e-3 within 10%");
}

fn param_sweep() -> Vec<ClassParams<f64>> {
    let mut out = Vec::new();
    for &q in &[0.2, 0.5, 0.8, 0.95] {
        for &m in &[0u32, 1, 2, 4] {
            for &alpha in &[0.0, 0.3, 0.7] {
                out.push(ClassParams::from_parts(q, m, alpha).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_6_distortion_conformance() {
    let radii = [0.25, 0.5, 0.9];
    let tol = 1e-6;

    // Every extreme point of every sweep parameter set.
    for p in param_sweep() {
        for n in 1..=12u32 {
            let h_point = extreme_point_h(&p, n, 12).unwrap();
            let rep = verify_distortion(&h_point, &p, &radii, 128, tol).unwrap();
            assert!(
                rep.pass,
                "{}",
                fail(&format!(
                    "criterion 6: h extreme point n={n} violates bounds by {:.3e} at (q={}, m={}, alpha={})",
                    rep.extremum,
                    p.q.get(),
                    p.m,
                    p.alpha
                ))
            );
            let g_point = extreme_point_g(&p, n, 12).unwrap();
            if g_point.is_hull_boundary() {
                continue; // b1 = 1 sits outside the bound formulas' domain
            }
            let rep = verify_distortion(&g_point, &p, &radii, 128, tol).unwrap();
            assert!(
                rep.pass,
                "{}",
                fail(&format!(
                    "criterion 6: g extreme point n={n} violates bounds by {:.3e}",
                    rep.extremum
                ))
            );
        }
    }

    // 200 random hull members with b1 = 0.
    let mut rng = rng_from_seed(606);
    for case in 0..200 {
        let p = random_class_params(&mut rng);
        let f = random_hull_member(&mut rng, &p, 12, true);
        let rep = verify_distortion(&f, &p, &radii, 128, tol).unwrap();
        assert!(
            rep.pass,
            "{}",
            fail(&format!(
                "criterion 6: hull member case {case} violates bounds by {:.3e}",
                rep.extremum
            ))
        );
    }

    // The n = 2 analytic extreme point touches the upper envelope at
    // its extremal angle (z on the negative real axis).
    let mut worst_touch = 0.0f64;
    for p in param_sweep() {
        let f = extreme_point_h(&p, 2, 12).unwrap();
        for &r in &radii {
            let bound = distortion_bounds(&p, 0.0, r).unwrap();
            let v = f.eval(C::new(-r, 0.0)).norm();
            worst_touch = worst_touch.max((bound.upper - v).abs());
        }
    }
    assert!(
        worst_touch <= 1e-9,
        "{}",
        fail(&format!(
            "criterion 6: extreme point misses the upper envelope by {worst_touch:.3e}"
        ))
    );
    pass(&format!(
        "criterion 6: extreme points and 200 hull members sit inside the distortion envelope; \
         the n=2 point touches it within {worst_touch:.3e} <= 1e-9"
    ));
}

#[test]
fn criterion_7_covering_conformance() {
    let ring = 1.0 - 1e-3;
    let tol = 1e-6;

    // b1 = 0 sweep of hull members.
    let mut rng = rng_from_seed(707);
    for case in 0..200 {
        let p = random_class_params(&mut rng);
        let f = random_hull_member(&mut rng, &p, 12, true);
        let rep = verify_covering(&f, &p, ring, 128, tol).unwrap();
        assert!(
            rep.pass,
            "{}",
            fail(&format!(
                "criterion 7: hull member case {case} min ring modulus {:.6} under covering radius",
                rep.extremum
            ))
        );
    }

    // The n = 2 extremal at (q, m, alpha) = (0.5, 0, 0) pinches the
    // ring minimum to 1/3 within 1e-3.
    let p = ClassParams::from_parts(0.5, 0, 0.0).unwrap();
    let f = extreme_point_h(&p, 2, 8).unwrap();
    let rep = verify_covering(&f, &p, ring, 256, tol).unwrap();
    assert!(
        rep.pass && (rep.extremum - 1.0 / 3.0).abs() <= 1e-3,
        "{}",
        fail(&format!(
            "criterion 7: extremal ring minimum {:.6} not within 1e-3 of 1/3",
            rep.extremum
        ))
    );

    // At b1 = 0 the covering radius equals the boundary limit of the
    // lower distortion bound.
    let mut worst = 0.0f64;
    for p in param_sweep() {
        let cov = covering_radius(&p, 0.0).unwrap();
        let lower = distortion_bounds(&p, 0.0, 1.0 - 1e-9).unwrap().lower;
        worst = worst.max((cov - lower).abs());
    }
    assert!(
        worst <= 1e-6,
        "{}",
        fail(&format!(
            "criterion 7: covering radius differs from the lower-bound limit by {worst:.3e}"
        ))
    );
    pass(&format!(
        "criterion 7: covering holds for 200 hull members; extremal ring minimum hits 1/3 within 1e-3; \
         covering radius matches the lower-bound limit within {worst:.3e} <= 1e-6"
    ));
}

#[test]
fn criterion_8_b1_discrepancy_report() {
    let report = b1_factor_comparison(512, 1e-6);
    assert!(
        !report.rows.is_empty(),
        "{}",
        fail("criterion 8: comparison table is empty")
    );
    // Either outcome is accepted; the finding is recorded here and in
    // the emitted table (qharm cover --b1-table).
    let outcome = if report.any_printed_violation {
        format!(
            "printed bounds VIOLATED by the grid-search oracle: worst upper excess {:.3e}, worst lower deficit {:.3e}",
            report.worst_upper_violation, report.worst_lower_violation
        )
    } else {
        format!(
            "printed bounds never violated by the grid-search oracle (worst upper excess {:.3e}, worst lower deficit {:.3e}, both <= 1e-6)",
            report.worst_upper_violation, report.worst_lower_violation
        )
    };
    pass(&format!(
        "criterion 8: b1-factor comparison table produced with {} rows; {outcome}",
        report.rows.len()
    ));
}

#[test]
fn criterion_9_determinism() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_qharm"))
            .args([
                "verify", "--random", "--seed", "42", "--count", "25", "--grid", "24x96",
            ])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(
        first.stdout == second.stdout && first.status.code() == second.status.code(),
        "{}",
        fail("criterion 9: verify runs with identical seeds differ")
    );
    assert!(
        !first.stdout.is_empty(),
        "{}",
        fail("criterion 9: verify produced no report")
    );
    pass(&format!(
        "criterion 9: two seeded verify runs are byte-identical ({} bytes, exit {})",
        first.stdout.len(),
        first.status.code().unwrap_or(-1)
    ));
}
