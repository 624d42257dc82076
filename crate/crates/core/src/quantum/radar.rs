use super::QuantumError;
use crate::scalar::Real;

/// Physical parameters of the radar equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadarParams<T> {
    /// Transmit power of the object, W.
    pub p_t: T,
    /// Antenna gain of the object.
    pub g_t: T,
    /// Antenna gain of the reconnaissance radar.
    pub g_r: T,
    /// Radar cross-section, m².
    pub sigma: T,
    /// Wavelength, m.
    pub lambda: T,
    /// Radar sensitivity (minimum detectable power), W.
    pub p_rmin: T,
}

impl<T: Real> RadarParams<T> {
    pub fn new(
        p_t: T,
        g_t: T,
        g_r: T,
        sigma: T,
        lambda: T,
        p_rmin: T,
    ) -> Result<Self, QuantumError> {
        for (name, v) in [
            ("p_t", p_t),
            ("g_t", g_t),
            ("g_r", g_r),
            ("sigma", sigma),
            ("lambda", lambda),
            ("p_rmin", p_rmin),
        ] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(QuantumError::InvalidParameter {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                    reason: "must be positive and finite",
                });
            }
        }
        Ok(RadarParams {
            p_t,
            g_t,
            g_r,
            sigma,
            lambda,
            p_rmin,
        })
    }

    /// `P_t·G_t·G_r·σ·λ² / (4π)²`, the distance-free factor of the radar equation.
    pub fn link_factor(&self) -> T {
        let four_pi = T::lit(4.0) * T::PI();
        self.p_t * self.g_t * self.g_r * self.sigma * self.lambda * self.lambda
            / (four_pi * four_pi)
    }
}

/// Received power at distance `x`, inverse-square in `x`.
pub fn received_power<T: Real>(params: &RadarParams<T>, x: T) -> Result<T, QuantumError> {
    if !(x > T::zero()) {
        return Err(QuantumError::NonPositiveDistance(
            x.to_f64().unwrap_or(f64::NAN),
        ));
    }
    Ok(params.link_factor() / (x * x))
}

/// Maximal reconnaissance distance, where the received power drops to the
/// radar sensitivity.
pub fn max_range<T: Real>(params: &RadarParams<T>) -> T {
    (params.link_factor() / params.p_rmin).sqrt()
}

/// Quasi-potential strength `γ = κ·P_t·G_t·G_r·σ·λ²/(4π)²` for a
/// user-chosen proportionality constant `κ ≥ 0`.
pub fn potential_strength<T: Real>(params: &RadarParams<T>, kappa: T) -> Result<T, QuantumError> {
    if !(kappa.is_finite() && kappa >= T::zero()) {
        return Err(QuantumError::InvalidParameter {
            name: "kappa",
            value: kappa.to_f64().unwrap_or(f64::NAN),
            reason: "must be non-negative and finite",
        });
    }
    Ok(kappa * params.link_factor())
}
