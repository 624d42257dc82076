//! Dempster-Shafer evidence fusion where each sensor report is weighted by a
//! distance-dependent confidence curve.
//!
//! The library is generic over the floating-point type ([`Real`]); the
//! aliases at the crate root fix it to `f64`, with `*32` variants for `f32`.
//!
//! ```
//! use dsq_core::{fuse, Bpa, Frame, SensorReport, Strategy};
//!
//! let frame = Frame::new(["A", "B", "C"]).unwrap();
//! let m1 = Bpa::new(frame.clone(), [(vec!["A"], 0.7), (vec!["B"], 0.3)]).unwrap();
//! let m2 = Bpa::new(frame, [(vec!["A"], 0.6), (vec!["A", "C"], 0.4)]).unwrap();
//! let reports = [
//!     SensorReport::with_reliability("r1", m1, 0.9).unwrap(),
//!     SensorReport::with_reliability("r2", m2, 0.4).unwrap(),
//! ];
//! let result = fuse(&reports, Strategy::ReliabilityWeighted).unwrap();
//! assert!(result.fused.mass_of(["A"]).unwrap() > 0.8);
//! ```

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod evidence;
pub mod fusion;
pub mod quantum;
mod scalar;

pub use evidence::{
    combine_dempster, combine_sequential, conflict, self_combine, weighted_average, EvidenceError,
    FocalSet, Frame,
};
pub use fusion::{compare_strategies, credibility, fuse, FusionError, Strategy};
pub use quantum::{
    bessel_j, bessel_y, confidence_curve, max_range, order_alpha, prob_density, psi,
    received_power, reliability_at, Mixing, QuantumError,
};
pub use scalar::Real;

pub type Bpa = evidence::Bpa<f64>;
pub type CurveParams = quantum::CurveParams<f64>;
pub type ConfidenceCurve = quantum::ConfidenceCurve<f64>;
pub type RadarParams = quantum::RadarParams<f64>;
pub type SensorReport = fusion::SensorReport<f64>;
pub type Reliability = fusion::Reliability<f64>;
pub type FusionResult = fusion::FusionResult<f64>;
pub type StrategyOutcome = fusion::StrategyOutcome<f64>;

pub type Bpa32 = evidence::Bpa<f32>;
pub type CurveParams32 = quantum::CurveParams<f32>;
pub type ConfidenceCurve32 = quantum::ConfidenceCurve<f32>;
pub type SensorReport32 = fusion::SensorReport<f32>;
pub type FusionResult32 = fusion::FusionResult<f32>;
