//! Frames of discernment, basic probability assignments and Dempster's rule.
//!
//! Subsets of a frame are 64-bit masks ([`FocalSet`]), so frames hold at most
//! 64 hypotheses and intersection is a single `&`.

mod bpa;
mod frame;
mod rules;

use thiserror::Error;

pub use bpa::Bpa;
pub use frame::{FocalSet, Frame, MAX_FRAME_SIZE};
pub use rules::{
    combine_dempster, combine_sequential, combine_sequential_traced, combine_with_conflict,
    conflict, self_combine, self_combine_traced, weighted_average,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvidenceError {
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("subset mask {0:#x} is not contained in the frame")]
    SubsetOutsideFrame(u64),
    #[error("positive mass assigned to the empty set")]
    EmptyFocalSet,
    #[error("subset {{{0}}} listed more than once")]
    DuplicateFocalSet(String),
    #[error("mass {mass} on {{{subset}}} is negative or not finite")]
    InvalidMass { subset: String, mass: f64 },
    #[error("masses sum to {sum}, expected 1")]
    MassSumViolation { sum: f64 },
    #[error("bodies of evidence are defined on different frames")]
    FrameMismatch,
    #[error("total conflict (K = {conflict}){}", step.map(|s| format!(" at combination step {s}")).unwrap_or_default())]
    TotalConflict { conflict: f64, step: Option<usize> },
    #[error("weights sum to {sum}, expected 1")]
    WeightSumViolation { sum: f64 },
    #[error("weight {weight} is negative or not finite")]
    InvalidWeight { weight: f64 },
    #[error("{bpas} bodies of evidence but {weights} weights")]
    LengthMismatch { bpas: usize, weights: usize },
    #[error("no bodies of evidence given")]
    NoEvidence,
    #[error("self-combination needs at least one copy")]
    ZeroCopies,
}
