//! Unevaluated sum of two floats (`hi + lo`), roughly doubling the working
//! precision. Only the operations the Bessel series needs are provided.

use std::ops::{Add, Div, Mul, Neg};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy)]
pub(crate) struct DoubleWord<T> {
    pub hi: T,
    pub lo: T,
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl<T: Real> DoubleWord<T> {
    pub fn new(v: T) -> Self {
        DoubleWord {
            hi: v,
            lo: T::zero(),
        }
    }

    /// Exact `a + b`.
    pub fn sum(a: T, b: T) -> Self {
        let (hi, lo) = two_sum(a, b);
        DoubleWord { hi, lo }
    }

    /// Exact `a * b`.
    pub fn product(a: T, b: T) -> Self {
        let (hi, lo) = two_prod(a, b);
        DoubleWord { hi, lo }
    }

    /// Multiplication by a power of two is exact componentwise.
    pub fn scale(self, factor: T) -> Self {
        DoubleWord {
            hi: self.hi * factor,
            lo: self.lo * factor,
        }
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }
}

impl<T: Real> Add for DoubleWord<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleWord { hi, lo }
    }
}

impl<T: Real> Neg for DoubleWord<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleWord {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl<T: Real> Mul for DoubleWord<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleWord { hi, lo }
    }
}

impl<T: Real> Mul<T> for DoubleWord<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p, e + self.lo * rhs);
        DoubleWord { hi, lo }
    }
}

impl<T: Real> Div for DoubleWord<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self + -(rhs * q1);
        let q2 = r.hi / rhs.hi;
        let r = r + -(rhs * q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleWord { hi, lo } + DoubleWord::new(q3)
    }
}
