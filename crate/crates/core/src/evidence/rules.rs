use std::collections::BTreeMap;

use super::{Bpa, EvidenceError, FocalSet};
use crate::scalar::Real;

fn ensure_same_frame<T: Real>(m1: &Bpa<T>, m2: &Bpa<T>) -> Result<(), EvidenceError> {
    if m1.frame().same_as(m2.frame()) {
        Ok(())
    } else {
        Err(EvidenceError::FrameMismatch)
    }
}

/// Conflict coefficient `K`: total product mass over pairs of focal elements
/// with empty intersection.
pub fn conflict<T: Real>(m1: &Bpa<T>, m2: &Bpa<T>) -> Result<T, EvidenceError> {
    ensure_same_frame(m1, m2)?;
    let mut k = T::zero();
    for (b, mb) in m1.focal_elements() {
        for (c, mc) in m2.focal_elements() {
            if b.intersection(c).is_empty() {
                k = k + mb * mc;
            }
        }
    }
    Ok(k)
}

/// Dempster's rule, also returning the conflict coefficient of the pair.
pub fn combine_with_conflict<T: Real>(
    m1: &Bpa<T>,
    m2: &Bpa<T>,
) -> Result<(Bpa<T>, T), EvidenceError> {
    ensure_same_frame(m1, m2)?;
    let mut joint: BTreeMap<FocalSet, T> = BTreeMap::new();
    let mut k = T::zero();
    for (b, mb) in m1.focal_elements() {
        for (c, mc) in m2.focal_elements() {
            let a = b.intersection(c);
            let product = mb * mc;
            if a.is_empty() {
                k = k + product;
            } else {
                let slot = joint.entry(a).or_insert_with(T::zero);
                *slot = *slot + product;
            }
        }
    }
    if k >= T::one() - T::CONFLICT_MARGIN {
        return Err(EvidenceError::TotalConflict {
            conflict: k.to_f64().unwrap_or(f64::NAN),
            step: None,
        });
    }
    let norm = T::one() - k;
    for mass in joint.values_mut() {
        *mass = *mass / norm;
    }
    Ok((Bpa::from_normalized(m1.frame().clone(), joint), k))
}

/// Dempster's rule of combination for two bodies of evidence.
pub fn combine_dempster<T: Real>(m1: &Bpa<T>, m2: &Bpa<T>) -> Result<Bpa<T>, EvidenceError> {
    combine_with_conflict(m1, m2).map(|(m, _)| m)
}

/// Left fold of [`combine_dempster`], returning the conflict of every step.
///
/// Step `i` (1-based) combines the running result with `boes[i]`; a
/// `TotalConflict` error carries that index.
pub fn combine_sequential_traced<T: Real>(
    boes: &[Bpa<T>],
) -> Result<(Bpa<T>, Vec<T>), EvidenceError> {
    let (first, rest) = boes.split_first().ok_or(EvidenceError::NoEvidence)?;
    let mut acc = first.clone();
    let mut conflicts = Vec::with_capacity(rest.len());
    for (i, next) in rest.iter().enumerate() {
        let (combined, k) = combine_with_conflict(&acc, next).map_err(|e| with_step(e, i + 1))?;
        acc = combined;
        conflicts.push(k);
    }
    Ok((acc, conflicts))
}

pub fn combine_sequential<T: Real>(boes: &[Bpa<T>]) -> Result<Bpa<T>, EvidenceError> {
    combine_sequential_traced(boes).map(|(m, _)| m)
}

/// Convex combination `Σ wᵢ·mᵢ` over the union of focal sets.
///
/// Weights must be non-negative and sum to one. Zero-weight inputs still have
/// their frame checked but contribute no entries.
pub fn weighted_average<T: Real>(boes: &[Bpa<T>], weights: &[T]) -> Result<Bpa<T>, EvidenceError> {
    if boes.len() != weights.len() {
        return Err(EvidenceError::LengthMismatch {
            bpas: boes.len(),
            weights: weights.len(),
        });
    }
    let first = boes.first().ok_or(EvidenceError::NoEvidence)?;
    for m in boes {
        ensure_same_frame(first, m)?;
    }
    for &w in weights {
        if !w.is_finite() || w < T::zero() {
            return Err(EvidenceError::InvalidWeight {
                weight: w.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let total: T = weights.iter().copied().sum();
    if (total - T::one()).abs() > T::MASS_TOLERANCE {
        return Err(EvidenceError::WeightSumViolation {
            sum: total.to_f64().unwrap_or(f64::NAN),
        });
    }

    let mut acc: BTreeMap<FocalSet, T> = BTreeMap::new();
    for (m, &w) in boes.iter().zip(weights) {
        if w == T::zero() {
            continue;
        }
        for (set, mass) in m.focal_elements() {
            let slot = acc.entry(set).or_insert_with(T::zero);
            *slot = *slot + w * mass;
        }
    }
    Ok(Bpa::from_normalized(first.frame().clone(), acc))
}

/// Dempster-combines `copies` copies of `m`, i.e. `m` with itself
/// `copies - 1` times, returning the conflict of each step.
pub fn self_combine_traced<T: Real>(
    m: &Bpa<T>,
    copies: usize,
) -> Result<(Bpa<T>, Vec<T>), EvidenceError> {
    if copies == 0 {
        return Err(EvidenceError::ZeroCopies);
    }
    let mut acc = m.clone();
    let mut conflicts = Vec::with_capacity(copies - 1);
    for step in 1..copies {
        let (combined, k) = combine_with_conflict(&acc, m).map_err(|e| with_step(e, step))?;
        acc = combined;
        conflicts.push(k);
    }
    Ok((acc, conflicts))
}

pub fn self_combine<T: Real>(m: &Bpa<T>, copies: usize) -> Result<Bpa<T>, EvidenceError> {
    self_combine_traced(m, copies).map(|(r, _)| r)
}

fn with_step(err: EvidenceError, step: usize) -> EvidenceError {
    match err {
        EvidenceError::TotalConflict { conflict, .. } => EvidenceError::TotalConflict {
            conflict,
            step: Some(step),
        },
        other => other,
    }
}
