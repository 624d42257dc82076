//! Fusion strategies over a set of sensor reports.
//!
//! * classical: Dempster's rule folded over the reports in order.
//! * Murphy: equal-weight average, then combined with itself.
//! * reliability-weighted: average weighted by each sensor's credibility
//!   `Crdᵢ = μᵢ / Σⱼ μⱼ`, then combined with itself.
//!
//! For the two averaging strategies the average is combined as `k` copies,
//! where `k` counts the reports that carry weight.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::evidence::{
    combine_sequential_traced, self_combine_traced, weighted_average, Bpa, EvidenceError,
};
use crate::quantum::{
    confidence_curve, reliability_at, CurveParams, QuantumError, DEFAULT_GRID_SIZE,
};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error("no sensor reports")]
    NoReports,
    #[error("all sensors are unreliable (reliabilities sum to {sum})")]
    AllUnreliable { sum: f64 },
    #[error("reliability {value} must lie in [0, 1]")]
    InvalidReliability { value: f64 },
    #[error("report `{source_id}`: reliability {value} must lie in [0, 1]")]
    InvalidReportReliability { source_id: String, value: f64 },
    #[error("report `{source_id}` has no reliability")]
    MissingReliability { source_id: String },
    #[error("report `{source_id}`: {source}")]
    Curve {
        source_id: String,
        #[source]
        source: QuantumError,
    },
    #[error("report `{source_id}` uses a different frame")]
    FrameMismatch { source_id: String },
    #[error(transparent)]
    Evidence(#[from] EvidenceError),
}

impl FusionError {
    /// True for a total-conflict failure of Dempster's rule.
    pub fn is_total_conflict(&self) -> bool {
        matches!(
            self,
            FusionError::Evidence(EvidenceError::TotalConflict { .. })
        )
    }
}

/// How much a sensor report is trusted.
#[derive(Debug, Clone, PartialEq)]
pub enum Reliability<T> {
    /// A confidence value in `[0, 1]` supplied directly.
    Direct(T),
    /// Read off the sensor's confidence curve at the object distance.
    Curve { distance: T, params: CurveParams<T> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SensorReport<T> {
    pub source_id: String,
    pub bpa: Bpa<T>,
    pub reliability: Option<Reliability<T>>,
}

impl<T: Real> SensorReport<T> {
    pub fn new(
        source_id: impl Into<String>,
        bpa: Bpa<T>,
        reliability: Option<Reliability<T>>,
    ) -> Result<Self, FusionError> {
        let source_id = source_id.into();
        match &reliability {
            Some(Reliability::Direct(mu)) if !(*mu >= T::zero() && *mu <= T::one()) => {
                return Err(FusionError::InvalidReportReliability {
                    source_id,
                    value: mu.to_f64().unwrap_or(f64::NAN),
                });
            }
            Some(Reliability::Curve { distance, .. }) if !(*distance > T::zero()) => {
                return Err(FusionError::Curve {
                    source_id,
                    source: QuantumError::NonPositiveDistance(
                        distance.to_f64().unwrap_or(f64::NAN),
                    ),
                });
            }
            _ => {}
        }
        Ok(SensorReport {
            source_id,
            bpa,
            reliability,
        })
    }

    pub fn with_reliability(
        source_id: impl Into<String>,
        bpa: Bpa<T>,
        mu: T,
    ) -> Result<Self, FusionError> {
        Self::new(source_id, bpa, Some(Reliability::Direct(mu)))
    }

    /// Resolves the report's `μ`, building the confidence curve when needed.
    pub fn resolve_reliability(&self) -> Result<T, FusionError> {
        match &self.reliability {
            Some(Reliability::Direct(mu)) => Ok(*mu),
            Some(Reliability::Curve { distance, params }) => {
                let wrap = |source| FusionError::Curve {
                    source_id: self.source_id.clone(),
                    source,
                };
                let curve = confidence_curve(params, DEFAULT_GRID_SIZE).map_err(wrap)?;
                reliability_at(&curve, *distance).map_err(wrap)
            }
            None => Err(FusionError::MissingReliability {
                source_id: self.source_id.clone(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Classical,
    Murphy,
    ReliabilityWeighted,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::Classical,
        Strategy::Murphy,
        Strategy::ReliabilityWeighted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Classical => "classical",
            Strategy::Murphy => "murphy",
            Strategy::ReliabilityWeighted => "reliability-weighted",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown strategy `{0}` (expected classical, murphy or reliability)")]
pub struct UnknownStrategy(pub String);

impl FromStr for Strategy {
    type Err = UnknownStrategy;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" | "dempster" => Ok(Strategy::Classical),
            "murphy" => Ok(Strategy::Murphy),
            "reliability" | "reliability-weighted" => Ok(Strategy::ReliabilityWeighted),
            other => Err(UnknownStrategy(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FusionResult<T> {
    pub fused: Bpa<T>,
    pub strategy: Strategy,
    /// Weight of each report in the average, in report order. Empty for the
    /// classical strategy.
    pub credibilities: Vec<(String, T)>,
    /// Conflict coefficient of every Dempster step performed.
    pub conflicts: Vec<T>,
}

impl<T: Real> FusionResult<T> {
    pub fn credibility_of(&self, source_id: &str) -> Option<T> {
        self.credibilities
            .iter()
            .find(|(id, _)| id == source_id)
            .map(|(_, c)| *c)
    }
}

/// Credibility degrees `Crdᵢ = μᵢ / Σⱼ μⱼ`.
pub fn credibility<T: Real>(mus: &[T]) -> Result<Vec<T>, FusionError> {
    for &mu in mus {
        if !(mu >= T::zero() && mu.is_finite()) {
            return Err(FusionError::InvalidReliability {
                value: mu.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let total: T = mus.iter().copied().sum();
    if total <= T::lit(1e-12) {
        return Err(FusionError::AllUnreliable {
            sum: total.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(mus.iter().map(|&mu| mu / total).collect())
}

fn check_frames<T: Real>(reports: &[SensorReport<T>]) -> Result<(), FusionError> {
    let first = reports.first().ok_or(FusionError::NoReports)?;
    for r in reports {
        if !r.bpa.frame().same_as(first.bpa.frame()) {
            return Err(FusionError::FrameMismatch {
                source_id: r.source_id.clone(),
            });
        }
    }
    Ok(())
}

fn average_and_self_combine<T: Real>(
    reports: &[SensorReport<T>],
    weights: Vec<T>,
    strategy: Strategy,
) -> Result<FusionResult<T>, FusionError> {
    let bpas: Vec<Bpa<T>> = reports.iter().map(|r| r.bpa.clone()).collect();
    let average = weighted_average(&bpas, &weights)?;
    let copies = weights.iter().filter(|w| **w > T::zero()).count();
    let (fused, conflicts) = self_combine_traced(&average, copies)?;
    Ok(FusionResult {
        fused,
        strategy,
        credibilities: reports
            .iter()
            .map(|r| r.source_id.clone())
            .zip(weights)
            .collect(),
        conflicts,
    })
}

/// Fuses the reports with one strategy.
pub fn fuse<T: Real>(
    reports: &[SensorReport<T>],
    strategy: Strategy,
) -> Result<FusionResult<T>, FusionError> {
    check_frames(reports)?;
    match strategy {
        Strategy::Classical => {
            let bpas: Vec<Bpa<T>> = reports.iter().map(|r| r.bpa.clone()).collect();
            let (fused, conflicts) = combine_sequential_traced(&bpas)?;
            Ok(FusionResult {
                fused,
                strategy,
                credibilities: Vec::new(),
                conflicts,
            })
        }
        Strategy::Murphy => {
            let w = T::one() / T::from_count(reports.len());
            average_and_self_combine(reports, vec![w; reports.len()], strategy)
        }
        Strategy::ReliabilityWeighted => {
            let mus = reports
                .iter()
                .map(SensorReport::resolve_reliability)
                .collect::<Result<Vec<T>, _>>()?;
            average_and_self_combine(reports, credibility(&mus)?, strategy)
        }
    }
}

/// Outcome of one strategy in a comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyOutcome<T> {
    pub strategy: Strategy,
    pub result: Result<FusionResult<T>, FusionError>,
}

/// Runs every strategy; a failing strategy is reported in its own row.
pub fn compare_strategies<T: Real>(reports: &[SensorReport<T>]) -> Vec<StrategyOutcome<T>> {
    Strategy::ALL
        .iter()
        .map(|&strategy| StrategyOutcome {
            strategy,
            result: fuse(reports, strategy),
        })
        .collect()
}
