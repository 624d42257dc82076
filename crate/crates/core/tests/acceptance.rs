//! Acceptance suite. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p dsq-core --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use common::*;
use dsq_core::evidence::{combine_dempster, Bpa};
use dsq_core::fusion::{credibility, fuse, SensorReport, Strategy};
use dsq_core::quantum::{bessel_j, bessel_y, confidence_curve, CurveParams, DEFAULT_GRID_SIZE};
use proptest::prelude::*;
use proptest::strategy::Strategy as _;
use proptest::test_runner::{Config, TestRunner};
use rand::{rngs::StdRng, Rng, SeedableRng};

const TABLE_TOLERANCE: f64 = 1e-3;

fn verdict(id: u32, title: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS criterion {id}: {title} ({detail})"),
        Err(detail) => {
            println!("FAIL criterion {id}: {title} ({detail})");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

fn check_row(strategy: Strategy, expected: [f64; 3]) -> Result<String, String> {
    let reports = worked_example();
    let start = Instant::now();
    let result = fuse(&reports, strategy).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let got = ["A", "B", "C"].map(|h| result.fused.mass_of([h]).unwrap());
    let detail = format!(
        "got A={:.4} B={:.4} C={:.4}, expected {:.4}/{:.4}/{:.4}, {:?}",
        got[0], got[1], got[2], expected[0], expected[1], expected[2], elapsed
    );
    let within = got
        .iter()
        .zip(expected)
        .all(|(g, e)| (g - e).abs() <= TABLE_TOLERANCE);
    if within && elapsed.as_secs_f64() < 1.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

#[test]
fn criterion_1_classical_row() {
    verdict(
        1,
        "classical Dempster fold of the five reports",
        check_row(Strategy::Classical, [0.0, 0.9057, 0.0943]),
    );
}

#[test]
fn criterion_2_murphy_row() {
    verdict(
        2,
        "equal-weight average with four self-combinations",
        check_row(Strategy::Murphy, [0.7971, 0.2011, 0.0018]),
    );
}

#[test]
fn criterion_3_reliability_weighted_row() {
    verdict(
        3,
        "credibility-weighted average with four self-combinations",
        check_row(Strategy::ReliabilityWeighted, [0.9373, 0.0609, 0.0018]),
    );
}

fn bessel_identities() -> Result<String, String> {
    let mut worst_closed: f64 = 0.0;
    for i in 0..1_000 {
        let z = 0.1 + (30.0 - 0.1) * i as f64 / 999.0;
        let amp = (2.0 / (PI * z)).sqrt();
        let ej = (bessel_j(0.5, z).unwrap() - amp * z.sin()).abs();
        let ey = (bessel_y(0.5, z).unwrap() + amp * z.cos()).abs();
        worst_closed = worst_closed.max(ej).max(ey);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let h = 1e-5;
    let mut worst_wronskian: f64 = 0.0;
    for _ in 0..100 {
        let a = rng.gen_range(1e-3..=0.5);
        let z = rng.gen_range(0.5..30.0);
        let j = |t: f64| bessel_j(a, t).unwrap();
        let y = |t: f64| bessel_y(a, t).unwrap();
        let dj = (j(z + h) - j(z - h)) / (2.0 * h);
        let dy = (y(z + h) - y(z - h)) / (2.0 * h);
        let w = j(z) * dy - dj * y(z);
        worst_wronskian = worst_wronskian.max((w - 2.0 / (PI * z)).abs());
    }
    let detail =
        format!("closed-form error {worst_closed:.2e}, Wronskian error {worst_wronskian:.2e}");
    if worst_closed < 1e-10 && worst_wronskian < 1e-8 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

#[test]
fn criterion_4_bessel_identities() {
    verdict(
        4,
        "half-order closed forms and Wronskian",
        bessel_identities(),
    );
}

fn ode_and_shape() -> Result<String, String> {
    let mut notes = Vec::new();
    for (name, c, l, xr) in RADAR_TABLE {
        let p = CurveParams::new(c, l, 0.0, xr).map_err(|e| e.to_string())?;
        let residual = ode_relative_residual(&p, DEFAULT_GRID_SIZE);
        let curve = confidence_curve(&p, DEFAULT_GRID_SIZE).map_err(|e| e.to_string())?;
        let peak = curve.mus().iter().copied().fold(f64::MIN, f64::max);
        let peaks = curve.mus().iter().filter(|&&m| m == 1.0).count();
        let in_range = curve.mus().iter().all(|&m| (0.0..=1.0).contains(&m));
        let beyond = curve.at(xr * 1.01).map_err(|e| e.to_string())?;
        let ok = residual < 1e-4
            && (peak - 1.0).abs() <= 1e-12
            && peaks == 1
            && in_range
            && beyond == 0.0
            && curve.x0() > 0.0
            && curve.x0() < xr;
        notes.push(format!(
            "{name}: residual {residual:.1e} x0 {:.4}",
            curve.x0()
        ));
        if !ok {
            return Err(notes.join("; "));
        }
    }
    Ok(notes.join("; "))
}

#[test]
fn criterion_5_ode_residual_and_curve_shape() {
    verdict(
        5,
        "ODE residual and confidence curve shape for the radar table",
        ode_and_shape(),
    );
}

fn property_suites() -> Result<String, String> {
    let start = Instant::now();
    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        ..Config::default()
    });
    runner
        .run(&arb_pair(), |(m1, m2)| {
            let n = m1.frame().len();
            let ab = combine_dempster(&m1, &m2);
            let ba = combine_dempster(&m2, &m1);
            let oracle = dense_dempster(n, &to_dense(&m1), &to_dense(&m2));
            match (ab, ba, oracle) {
                (Ok(ab), Ok(ba), Some((dense, _))) => {
                    prop_assert!(ab.max_abs_diff(&ba) <= 1e-12);
                    for (x, y) in to_dense(&ab).iter().zip(&dense) {
                        prop_assert!((x - y).abs() <= 1e-12);
                    }
                    prop_assert!((ab.total_mass() - 1.0).abs() <= 1e-9);
                }
                (Err(_), Err(_), None) => {}
                _ => prop_assert!(false, "routes disagree on total conflict"),
            }
            let v = Bpa::vacuous(m1.frame().clone());
            prop_assert!(combine_dempster(&m1, &v).unwrap().max_abs_diff(&m1) <= 1e-12);
            Ok(())
        })
        .map_err(|e| format!("Dempster suite: {e}"))?;

    let mut runner = TestRunner::new(Config {
        cases: 1_000,
        ..Config::default()
    });
    let reports = (1usize..=4).prop_flat_map(|n| {
        (
            prop::collection::vec((arb_bpa(n, 3), 0.05f64..1.0), 1..=5),
            arb_bpa(n, 3),
            0.01f64..100.0,
        )
    });
    runner
        .run(&reports, |(items, extra, scale)| {
            let base: Vec<SensorReport<f64>> = items
                .iter()
                .enumerate()
                .map(|(i, (m, mu))| {
                    SensorReport::with_reliability(format!("s{i}"), m.clone(), *mu).unwrap()
                })
                .collect();
            let mus: Vec<f64> = items.iter().map(|(_, mu)| *mu).collect();
            let scaled: Vec<f64> = mus.iter().map(|m| m * scale).collect();
            let (c1, c2) = (credibility(&mus).unwrap(), credibility(&scaled).unwrap());
            for (a, b) in c1.iter().zip(&c2) {
                prop_assert!((a - b).abs() <= 1e-12);
            }

            let fused = fuse(&base, Strategy::ReliabilityWeighted);
            let mut with_dead = base.clone();
            with_dead.push(SensorReport::with_reliability("dead", extra, 0.0).unwrap());
            let fused_dead = fuse(&with_dead, Strategy::ReliabilityWeighted);
            match (fused, fused_dead) {
                (Ok(a), Ok(b)) => prop_assert!(a.fused.max_abs_diff(&b.fused) <= 1e-12),
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "zero-reliability report changed success"),
            }
            Ok(())
        })
        .map_err(|e| format!("credibility suite: {e}"))?;
    let elapsed = start.elapsed();
    let detail = format!("10000 + 1000 trials in {elapsed:?}");
    if elapsed.as_secs_f64() < 60.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

#[test]
fn criterion_6_property_suites() {
    verdict(6, "randomized property suites", property_suites());
}
