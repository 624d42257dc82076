use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar used throughout the crate (`f32` or `f64`).
///
/// The associated constants carry the precision-dependent tolerances; the
/// `f64` values are the reference ones.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Allowed deviation of a mass (or weight) total from one.
    const MASS_TOLERANCE: Self;
    /// Conflict values at or above `1 - CONFLICT_MARGIN` count as total conflict.
    const CONFLICT_MARGIN: Self;

    /// Converts an `f64` literal. Panics only for values that do not fit the type.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }
}

impl Real for f64 {
    const MASS_TOLERANCE: f64 = 1e-9;
    const CONFLICT_MARGIN: f64 = 1e-12;
}

impl Real for f32 {
    const MASS_TOLERANCE: f32 = 1e-5;
    const CONFLICT_MARGIN: f32 = 1e-6;
}
