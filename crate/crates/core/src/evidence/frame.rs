use std::fmt;
use std::sync::Arc;

use super::EvidenceError;

/// Largest frame whose power set fits in a `u64` mask.
pub const MAX_FRAME_SIZE: usize = 64;

/// A subset of a frame of discernment, one bit per hypothesis.
///
/// Bit `i` is set when the `i`-th label of the owning [`Frame`] belongs to the
/// subset. The mask carries no reference to its frame; [`Bpa`](super::Bpa)
/// values keep the frame alongside their focal sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FocalSet(u64);

impl FocalSet {
    pub const EMPTY: FocalSet = FocalSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        FocalSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn intersection(self, other: FocalSet) -> FocalSet {
        FocalSet(self.0 & other.0)
    }

    pub const fn union(self, other: FocalSet) -> FocalSet {
        FocalSet(self.0 | other.0)
    }

    pub const fn is_subset_of(self, other: FocalSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    /// Indices of the hypotheses in the set, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }
}

/// Ordered set of mutually exclusive hypotheses.
///
/// Cloning is cheap; the labels are shared.
#[derive(Clone)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self, EvidenceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(EvidenceError::InvalidFrame(
                "frame has no hypotheses".into(),
            ));
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(EvidenceError::InvalidFrame(format!(
                "frame has {} hypotheses, at most {MAX_FRAME_SIZE} are supported",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(EvidenceError::InvalidFrame(format!("label {i} is empty")));
            }
            if labels[..i].contains(label) {
                return Err(EvidenceError::InvalidFrame(format!(
                    "duplicate label `{label}`"
                )));
            }
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole frame, Θ.
    pub fn universe(&self) -> FocalSet {
        let n = self.labels.len();
        if n == MAX_FRAME_SIZE {
            FocalSet(u64::MAX)
        } else {
            FocalSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(&self, label: &str) -> Result<FocalSet, EvidenceError> {
        self.index_of(label)
            .map(|i| FocalSet(1 << i))
            .ok_or_else(|| EvidenceError::UnknownLabel(label.to_string()))
    }

    /// Builds the subset containing exactly the given labels. An empty label
    /// list yields the empty set.
    pub fn subset<I, S>(&self, labels: I) -> Result<FocalSet, EvidenceError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().try_fold(FocalSet::EMPTY, |acc, label| {
            Ok(acc.union(self.singleton(label.as_ref())?))
        })
    }

    pub fn contains(&self, set: FocalSet) -> bool {
        set.is_subset_of(self.universe())
    }

    /// Labels of `set` in frame order.
    pub fn labels_of(&self, set: FocalSet) -> Vec<&str> {
        set.indices()
            .filter_map(|i| self.labels.get(i).map(String::as_str))
            .collect()
    }

    /// Comma-joined labels in frame order, e.g. `A,C`.
    pub fn format_subset(&self, set: FocalSet) -> String {
        self.labels_of(set).join(",")
    }

    /// True when both frames list the same labels in the same order.
    pub fn same_as(&self, other: &Frame) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Frame").field(&self.labels).finish()
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}
