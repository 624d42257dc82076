//! Distance-dependent reliability of radar reports.
//!
//! The amplitude inside the well `(0, x_r]` is `ψ(x) = √x·[J_α(z) + Y_α(z)]`
//! with `z = (√L/c)·x` and `α = ½·√((c² − 4γ)/c²)`. It solves
//! `−c²ψ'' − (γ/x²)ψ = Lψ` and vanishes outside the well. The confidence
//! curve `μ(x)` is `ψ²` scaled to peak at one.

mod bessel;
mod curve;
mod double_word;
mod radar;

use thiserror::Error;

pub use bessel::{
    bessel_j, bessel_j_extended, bessel_jy, bessel_y, ASYMPTOTIC_THRESHOLD, MIN_ORDER,
};
pub use curve::{
    confidence_curve, order_alpha, prob_density, psi, psi_interior, reliability_at,
    ConfidenceCurve, CurveParams, Mixing, DEFAULT_GRID_SIZE, MIN_GRID_SIZE,
};
pub use radar::{max_range, potential_strength, received_power, RadarParams};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("distance must be positive, got {0}")]
    NonPositiveDistance(f64),
    #[error("Bessel argument must be positive, got {0}")]
    NonPositiveArgument(f64),
    #[error("Bessel order {order} outside supported range {allowed}")]
    OrderOutOfRange { order: f64, allowed: &'static str },
    #[error("gamma = {gamma} reaches c²/4 = {limit}; the Bessel order would be complex")]
    ComplexOrderRegime { gamma: f64, limit: f64 },
    #[error("parameter {name} = {value} {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("grid of {requested} points is below the minimum of {minimum}")]
    GridTooSmall { requested: usize, minimum: usize },
    #[error("degenerate confidence curve: {0}")]
    DegenerateCurve(String),
}
