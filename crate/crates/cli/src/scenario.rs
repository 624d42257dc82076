//! JSON scenario files.
//!
//! ```json
//! {
//!   "format": 1,
//!   "frame": ["A", "B", "C"],
//!   "defaults": { "curve": { "c": 10, "L": 1.0, "gamma": 0, "x_r": 10 } },
//!   "reports": [
//!     { "source_id": "r1", "masses": { "A": 0.6, "A,C": 0.4 }, "reliability": 0.55 },
//!     { "source_id": "r2", "masses": { "B": 1.0 }, "distance": 3.5 }
//!   ]
//! }
//! ```
//!
//! Subsets are comma-separated labels. A report's reliability is either given
//! directly or read off a confidence curve at `distance`; the curve comes from
//! the report or from `defaults.curve`. A direct reliability wins when both
//! are present.

use std::collections::BTreeMap;

use dsq_core::evidence::{Bpa, Frame};
use dsq_core::{CurveParams, Mixing, QuantumError, Reliability, SensorReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("parse error at line {line}, column {column} (field `{path}`): {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: {message}")]
    Validation { context: String, message: String },
}

impl ScenarioError {
    fn validation(context: impl Into<String>, message: impl ToString) -> Self {
        ScenarioError::Validation {
            context: context.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDoc {
    pub format: u32,
    pub frame: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defaults: Option<DefaultsDoc>,
    pub reports: Vec<ReportDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefaultsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub source_id: String,
    pub masses: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reliability: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub c: f64,
    #[serde(rename = "L")]
    pub big_l: f64,
    #[serde(default)]
    pub gamma: f64,
    pub x_r: f64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub dirichlet: bool,
}

impl CurveDoc {
    pub fn to_params(self) -> Result<CurveParams, QuantumError> {
        let mixing = if self.dirichlet {
            Mixing::Dirichlet
        } else {
            Mixing::Unweighted
        };
        Ok(CurveParams::new(self.c, self.big_l, self.gamma, self.x_r)?.with_mixing(mixing))
    }

    pub fn from_params(p: &CurveParams) -> Self {
        CurveDoc {
            c: p.c(),
            big_l: p.big_l(),
            gamma: p.gamma(),
            x_r: p.x_r(),
            dirichlet: p.mixing() == Mixing::Dirichlet,
        }
    }
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub frame: Frame,
    pub reports: Vec<SensorReport>,
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let doc: ScenarioDoc = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ScenarioError::Parse {
            path,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    de.end().map_err(|e| ScenarioError::Parse {
        path: ".".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    scenario_from_doc(&doc)
}

/// Splits `"A, C"` into trimmed labels.
pub fn parse_subset(spec: &str) -> Vec<&str> {
    spec.split(',').map(str::trim).collect()
}

pub fn scenario_from_doc(doc: &ScenarioDoc) -> Result<Scenario, ScenarioError> {
    if doc.format != FORMAT_VERSION {
        return Err(ScenarioError::validation(
            "format",
            format!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                doc.format
            ),
        ));
    }
    if let Some(bad) = doc
        .frame
        .iter()
        .find(|l| l.contains(',') || l.trim() != l.as_str())
    {
        return Err(ScenarioError::validation(
            "frame",
            format!("label `{bad}` may not contain commas or surrounding whitespace"),
        ));
    }
    let frame =
        Frame::new(doc.frame.iter().cloned()).map_err(|e| ScenarioError::validation("frame", e))?;
    if doc.reports.is_empty() {
        return Err(ScenarioError::validation("reports", "no reports"));
    }
    let default_curve = doc.defaults.as_ref().and_then(|d| d.curve);

    let mut reports = Vec::with_capacity(doc.reports.len());
    for (i, r) in doc.reports.iter().enumerate() {
        let ctx = |field: &str| format!("reports[{i}] (`{}`): {field}", r.source_id);
        if r.source_id.is_empty() {
            return Err(ScenarioError::validation(
                format!("reports[{i}]"),
                "empty source_id",
            ));
        }
        if doc.reports[..i].iter().any(|o| o.source_id == r.source_id) {
            return Err(ScenarioError::validation(
                ctx("source_id"),
                "duplicate source_id",
            ));
        }
        let entries = r.masses.iter().map(|(k, m)| (parse_subset(k), *m));
        let bpa = Bpa::new(frame.clone(), entries)
            .map_err(|e| ScenarioError::validation(ctx("masses"), e))?;

        let reliability = match (r.reliability, r.distance) {
            (Some(mu), _) => Some(Reliability::Direct(mu)),
            (None, Some(distance)) => {
                let curve = r.curve.or(default_curve).ok_or_else(|| {
                    ScenarioError::validation(
                        ctx("distance"),
                        "no curve parameters for this report",
                    )
                })?;
                let params = curve
                    .to_params()
                    .map_err(|e| ScenarioError::validation(ctx("curve"), e))?;
                Some(Reliability::Curve { distance, params })
            }
            (None, None) if r.curve.is_some() => {
                return Err(ScenarioError::validation(
                    ctx("curve"),
                    "curve given without a distance",
                ));
            }
            (None, None) => None,
        };
        let report = SensorReport::new(r.source_id.clone(), bpa, reliability)
            .map_err(|e| ScenarioError::validation(ctx("reliability"), e))?;
        reports.push(report);
    }
    Ok(Scenario { frame, reports })
}

/// Document form of a validated scenario. Curves are written per report.
pub fn scenario_to_doc(scenario: &Scenario) -> ScenarioDoc {
    let reports = scenario
        .reports
        .iter()
        .map(|r| {
            let masses = r
                .bpa
                .focal_elements()
                .map(|(s, m)| (r.bpa.frame().format_subset(s), m))
                .collect();
            let (reliability, distance, curve) = match &r.reliability {
                Some(Reliability::Direct(mu)) => (Some(*mu), None, None),
                Some(Reliability::Curve { distance, params }) => {
                    (None, Some(*distance), Some(CurveDoc::from_params(params)))
                }
                None => (None, None, None),
            };
            ReportDoc {
                source_id: r.source_id.clone(),
                masses,
                reliability,
                distance,
                curve,
            }
        })
        .collect();
    ScenarioDoc {
        format: FORMAT_VERSION,
        frame: scenario.frame.labels().to_vec(),
        defaults: None,
        reports,
    }
}

pub fn serialize_scenario(scenario: &Scenario) -> String {
    serde_json::to_string_pretty(&scenario_to_doc(scenario))
        .expect("scenario documents always serialize")
}
