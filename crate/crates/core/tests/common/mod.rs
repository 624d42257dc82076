#![allow(dead_code)]

use dsq_core::evidence::{Bpa, FocalSet, Frame};
use dsq_core::fusion::SensorReport;
use dsq_core::quantum::{psi_interior, CurveParams};
use proptest::prelude::*;

pub fn abc() -> Frame {
    Frame::new(["A", "B", "C"]).unwrap()
}

pub fn bpa(frame: &Frame, entries: &[(&[&str], f64)]) -> Bpa<f64> {
    Bpa::new(
        frame.clone(),
        entries.iter().map(|(l, m)| (l.iter().copied(), *m)),
    )
    .unwrap()
}

/// The five reports of the worked radar example with their stated reliabilities.
pub fn worked_example() -> Vec<SensorReport<f64>> {
    let f = abc();
    let boes = [
        bpa(&f, &[(&["A"], 0.6), (&["B"], 0.15), (&["A", "C"], 0.25)]),
        bpa(&f, &[(&["A"], 0.5), (&["B"], 0.3), (&["C"], 0.2)]),
        bpa(&f, &[(&["B"], 0.95), (&["C"], 0.05)]),
        bpa(&f, &[(&["A"], 0.55), (&["B"], 0.25), (&["A", "C"], 0.2)]),
        bpa(&f, &[(&["A"], 0.6), (&["B"], 0.3), (&["B", "C"], 0.1)]),
    ];
    let mus = [0.55, 0.6, 0.25, 0.45, 0.5];
    boes.into_iter()
        .zip(mus)
        .enumerate()
        .map(|(i, (m, mu))| {
            SensorReport::with_reliability(format!("radar{}", i + 1), m, mu).unwrap()
        })
        .collect()
}

/// Dempster's rule by exhaustive enumeration of every subset pair, on dense
/// mass vectors indexed by mask. Returns `None` on total conflict.
pub fn dense_dempster(n: usize, m1: &[f64], m2: &[f64]) -> Option<(Vec<f64>, f64)> {
    let size = 1usize << n;
    let mut out = vec![0.0; size];
    let mut k = 0.0;
    for b in 0..size {
        for c in 0..size {
            let p = m1[b] * m2[c];
            if b & c == 0 {
                k += p;
            } else {
                out[b & c] += p;
            }
        }
    }
    if k >= 1.0 - 1e-12 {
        return None;
    }
    for v in &mut out {
        *v /= 1.0 - k;
    }
    Some((out, k))
}

pub fn to_dense(m: &Bpa<f64>) -> Vec<f64> {
    let mut v = vec![0.0; 1 << m.frame().len()];
    for (s, mass) in m.focal_elements() {
        v[s.bits() as usize] = mass;
    }
    v
}

pub fn frame_of_size(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("h{i}"))).unwrap()
}

/// Random BPA on a frame of `n` hypotheses with at most `max_focal` focal sets.
pub fn arb_bpa(n: usize, max_focal: usize) -> impl Strategy<Value = Bpa<f64>> {
    let full = (1u64 << n) - 1;
    prop::collection::vec((1..=full, 0.01f64..1.0), 1..=max_focal).prop_map(move |raw| {
        let mut merged: Vec<(u64, f64)> = Vec::new();
        for (mask, w) in raw {
            match merged.iter_mut().find(|(m, _)| *m == mask) {
                Some(slot) => slot.1 += w,
                None => merged.push((mask, w)),
            }
        }
        let total: f64 = merged.iter().map(|(_, w)| w).sum();
        Bpa::from_sets(
            frame_of_size(n),
            merged
                .into_iter()
                .map(|(m, w)| (FocalSet::from_bits(m), w / total)),
        )
        .unwrap()
    })
}

pub fn arb_pair() -> impl Strategy<Value = (Bpa<f64>, Bpa<f64>)> {
    (1usize..=4).prop_flat_map(|n| (arb_bpa(n, 4), arb_bpa(n, 4)))
}

pub fn arb_triple() -> impl Strategy<Value = (Bpa<f64>, Bpa<f64>, Bpa<f64>)> {
    (1usize..=4).prop_flat_map(|n| (arb_bpa(n, 4), arb_bpa(n, 4), arb_bpa(n, 4)))
}

/// Worst residual of `−c²ψ'' − (γ/x²)ψ − Lψ` over the grid points between the
/// 1 % and 99 % marks, relative to the largest operator term seen there.
/// `ψ''` is a central difference with step `x_r·1e-4`.
pub fn ode_relative_residual(params: &CurveParams<f64>, grid: usize) -> f64 {
    let (c, l, g, xr) = (params.c(), params.big_l(), params.gamma(), params.x_r());
    let h = xr * 1e-4;
    let lo = grid / 100;
    let hi = grid - grid / 100;
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in lo..hi {
        let x = xr * i as f64 / grid as f64;
        let f = |t: f64| psi_interior(params, t).unwrap();
        let (fm, f0, fp) = (f(x - h), f(x), f(x + h));
        let second = (fp - 2.0 * f0 + fm) / (h * h);
        let residual = -c * c * second - g / (x * x) * f0 - l * f0;
        worst = worst.max(residual.abs());
        scale = scale.max((c * c * second).abs() + (g / (x * x) * f0).abs() + (l * f0).abs());
    }
    worst / scale
}

/// Radar rows of the reference curve table: (name, c, L, x_r).
pub const RADAR_TABLE: [(&str, f64, f64, f64); 5] = [
    ("a", 10.0, 0.7, 14.0),
    ("b", 10.0, 0.8, 12.0),
    ("c", 10.0, 1.0, 10.0),
    ("d", 10.0, 1.1, 13.0),
    ("e", 10.0, 1.3, 6.0),
];
