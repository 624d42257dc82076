use std::collections::BTreeMap;
use std::fmt;

use super::{EvidenceError, FocalSet, Frame};
use crate::scalar::Real;

/// Basic probability assignment over the subsets of a [`Frame`].
///
/// Only focal elements are stored: every entry has strictly positive mass, the
/// empty set never appears and the masses add up to one within
/// [`Real::MASS_TOLERANCE`].
#[derive(Clone, PartialEq)]
pub struct Bpa<T> {
    frame: Frame,
    masses: BTreeMap<FocalSet, T>,
}

impl<T: Real> Bpa<T> {
    /// Validates masses given by label lists, e.g. `(["A", "C"], 0.25)`.
    pub fn new<I, L, S>(frame: Frame, entries: I) -> Result<Self, EvidenceError>
    where
        I: IntoIterator<Item = (L, T)>,
        L: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut sets = Vec::new();
        for (labels, mass) in entries {
            sets.push((frame.subset(labels)?, mass));
        }
        Self::from_sets(frame, sets)
    }

    /// Validates masses given directly as focal sets.
    pub fn from_sets<I>(frame: Frame, entries: I) -> Result<Self, EvidenceError>
    where
        I: IntoIterator<Item = (FocalSet, T)>,
    {
        let mut masses = BTreeMap::new();
        let mut total = T::zero();
        for (set, mass) in entries {
            if !mass.is_finite() || mass < T::zero() {
                return Err(EvidenceError::InvalidMass {
                    subset: frame.format_subset(set),
                    mass: mass.to_f64().unwrap_or(f64::NAN),
                });
            }
            if !frame.contains(set) {
                return Err(EvidenceError::SubsetOutsideFrame(set.bits()));
            }
            if mass == T::zero() {
                continue;
            }
            if set.is_empty() {
                return Err(EvidenceError::EmptyFocalSet);
            }
            if masses.insert(set, mass).is_some() {
                return Err(EvidenceError::DuplicateFocalSet(frame.format_subset(set)));
            }
            total = total + mass;
        }
        if (total - T::one()).abs() > T::MASS_TOLERANCE {
            return Err(EvidenceError::MassSumViolation {
                sum: total.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Bpa { frame, masses })
    }

    /// Total ignorance: all mass on the whole frame.
    pub fn vacuous(frame: Frame) -> Self {
        let mut masses = BTreeMap::new();
        masses.insert(frame.universe(), T::one());
        Bpa { frame, masses }
    }

    /// Builds from an accumulator the rules module has already normalized.
    /// Entries that rounded to zero are dropped.
    pub(crate) fn from_normalized(frame: Frame, masses: BTreeMap<FocalSet, T>) -> Self {
        let masses = masses.into_iter().filter(|(_, m)| *m > T::zero()).collect();
        Bpa { frame, masses }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Mass of `set`; zero when it is not a focal element.
    pub fn mass(&self, set: FocalSet) -> T {
        self.masses.get(&set).copied().unwrap_or_else(T::zero)
    }

    /// Mass of the subset named by `labels`.
    pub fn mass_of<L, S>(&self, labels: L) -> Result<T, EvidenceError>
    where
        L: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.mass(self.frame.subset(labels)?))
    }

    /// Focal elements with their masses, ordered by mask value.
    pub fn focal_elements(&self) -> impl ExactSizeIterator<Item = (FocalSet, T)> + '_ {
        self.masses.iter().map(|(s, m)| (*s, *m))
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    pub fn total_mass(&self) -> T {
        self.masses.values().copied().sum()
    }

    pub fn is_vacuous(&self) -> bool {
        self.masses.len() == 1 && self.masses.contains_key(&self.frame.universe())
    }

    /// Largest absolute per-subset difference to `other`, over the union of
    /// both focal sets. Frames are not compared.
    pub fn max_abs_diff(&self, other: &Bpa<T>) -> T {
        self.masses
            .keys()
            .chain(other.masses.keys())
            .map(|s| (self.mass(*s) - other.mass(*s)).abs())
            .fold(T::zero(), T::max)
    }
}

impl<T: fmt::Debug> fmt::Debug for Bpa<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (set, mass) in &self.masses {
            map.entry(&self.frame.format_subset(*set), mass);
        }
        map.finish()
    }
}

impl<T: fmt::Display> fmt::Display for Bpa<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (set, mass)) in self.masses.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}: {}", self.frame.format_subset(*set), mass)?;
        }
        write!(f, "}}")
    }
}
