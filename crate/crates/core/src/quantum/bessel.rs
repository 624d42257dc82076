//! Bessel functions of the first and second kind for real order.
//!
//! Two evaluation routes are used:
//!
//! * `z ≤ 20`: the ascending series
//!   `J_ν(z) = (z/2)^ν / Γ(ν+1) · Σₖ (−z²/4)ᵏ / (k! (ν+1)ₖ)`,
//!   summed in double-word arithmetic. Near `z = 20` the largest terms reach
//!   about 1e7 while the sum is O(1), so plain `f64` summation would lose
//!   seven to eight digits to cancellation.
//! * `z > 20`: Hankel's large-argument expansion, summed until its terms fall
//!   below machine precision.
//!
//! `Y_ν` is formed from `J_ν` and `J_{−ν}` on the series side and directly
//! from the Hankel phase on the asymptotic side.

use super::double_word::DoubleWord;
use super::QuantumError;
use crate::scalar::Real;

/// Argument at which evaluation switches from the series to the asymptotic
/// expansion.
pub const ASYMPTOTIC_THRESHOLD: f64 = 20.0;

/// Smallest order accepted for `Y_α`; below it `sin(απ)` makes the
/// `J_α`/`J_{−α}` combination ill-conditioned.
pub const MIN_ORDER: f64 = 1e-6;

const MAX_SERIES_TERMS: usize = 500;
const MAX_ASYMPTOTIC_TERMS: usize = 60;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function (Lanczos approximation with reflection below ½).
pub(crate) fn gamma<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    if x < half {
        return T::PI() / ((T::PI() * x).sin() * gamma(T::one() - x));
    }
    let x = x - T::one();
    let mut acc = T::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (x + T::from_count(i));
    }
    let t = x + T::lit(LANCZOS_G) + half;
    (T::lit(2.0) * T::PI()).sqrt() * t.powf(x + half) * (-t).exp() * acc
}

fn check_argument<T: Real>(z: T) -> Result<(), QuantumError> {
    if z > T::zero() && z.is_finite() {
        Ok(())
    } else {
        Err(QuantumError::NonPositiveArgument(
            z.to_f64().unwrap_or(f64::NAN),
        ))
    }
}

fn order_error<T: Real>(alpha: T, allowed: &'static str) -> QuantumError {
    QuantumError::OrderOutOfRange {
        order: alpha.to_f64().unwrap_or(f64::NAN),
        allowed,
    }
}

/// `J_α(z)` for `0 < α ≤ ½`, `z > 0`.
pub fn bessel_j<T: Real>(alpha: T, z: T) -> Result<T, QuantumError> {
    if !(alpha > T::zero() && alpha <= T::lit(0.5)) {
        return Err(order_error(alpha, "0 < α ≤ 0.5"));
    }
    check_argument(z)?;
    Ok(j_unchecked(alpha, z))
}

/// `Y_α(z)` for `1e-6 ≤ α ≤ ½`, `z > 0`.
pub fn bessel_y<T: Real>(alpha: T, z: T) -> Result<T, QuantumError> {
    if !(alpha >= T::lit(MIN_ORDER) && alpha <= T::lit(0.5)) {
        return Err(order_error(alpha, "1e-6 ≤ α ≤ 0.5"));
    }
    check_argument(z)?;
    Ok(y_unchecked(alpha, z))
}

/// `(J_α(z), Y_α(z))` sharing the work of a single evaluation.
pub fn bessel_jy<T: Real>(alpha: T, z: T) -> Result<(T, T), QuantumError> {
    if !(alpha >= T::lit(MIN_ORDER) && alpha <= T::lit(0.5)) {
        return Err(order_error(alpha, "1e-6 ≤ α ≤ 0.5"));
    }
    check_argument(z)?;
    if z > T::lit(ASYMPTOTIC_THRESHOLD) {
        Ok(hankel(alpha, z))
    } else {
        let j = series_j(alpha, z);
        Ok((j, y_from_series(alpha, z, j)))
    }
}

/// `J_ν(z)` for any order `−1 < ν ≤ 2`.
///
/// Wider than [`bessel_j`] so that recurrence relations linking `ν − 1`,
/// `ν` and `ν + 1` can be checked.
pub fn bessel_j_extended<T: Real>(nu: T, z: T) -> Result<T, QuantumError> {
    if !(nu > -T::one() && nu <= T::lit(2.0)) {
        return Err(order_error(nu, "-1 < ν ≤ 2"));
    }
    check_argument(z)?;
    Ok(j_unchecked(nu, z))
}

fn j_unchecked<T: Real>(nu: T, z: T) -> T {
    if z > T::lit(ASYMPTOTIC_THRESHOLD) {
        hankel(nu, z).0
    } else {
        series_j(nu, z)
    }
}

fn y_unchecked<T: Real>(alpha: T, z: T) -> T {
    if z > T::lit(ASYMPTOTIC_THRESHOLD) {
        hankel(alpha, z).1
    } else {
        y_from_series(alpha, z, series_j(alpha, z))
    }
}

fn y_from_series<T: Real>(alpha: T, z: T, j: T) -> T {
    let angle = alpha * T::PI();
    (j * angle.cos() - series_j(-alpha, z)) / angle.sin()
}

/// Ascending series for `J_ν(z)`, valid for `ν > −1`.
pub(crate) fn series_j<T: Real>(nu: T, z: T) -> T {
    let q = DoubleWord::product(z, z).scale(T::lit(0.25));
    let q_mag = q.hi;
    let tiny = T::epsilon() * T::lit(0.125);

    let mut term = DoubleWord::new(T::one());
    let mut sum = term;
    for k in 1..MAX_SERIES_TERMS {
        let kf = T::from_count(k);
        let denom = DoubleWord::sum(kf, nu) * kf;
        term = -(term * q / denom);
        sum = sum + term;
        if kf * kf > q_mag && term.hi.abs() <= tiny * sum.hi.abs() {
            break;
        }
    }
    (z * T::lit(0.5)).powf(nu) / gamma(nu + T::one()) * sum.value()
}

/// Hankel asymptotic expansion, returning `(J_ν(z), Y_ν(z))`.
pub(crate) fn hankel<T: Real>(nu: T, z: T) -> (T, T) {
    let mu = T::lit(4.0) * nu * nu;
    let eight_z = T::lit(8.0) * z;
    let tiny = T::epsilon() * T::lit(0.125);

    let mut p = T::one();
    let mut q = T::zero();
    let mut term = T::one();
    let mut previous = T::infinity();
    for k in 1..MAX_ASYMPTOTIC_TERMS {
        let odd = T::from_count(2 * k - 1);
        term = term * (mu - odd * odd) / (T::from_count(k) * eight_z);
        let size = term.abs();
        if size > previous {
            break;
        }
        // a_k enters P for even k and Q for odd k, with alternating signs.
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p = p + signed;
        } else {
            q = q + signed;
        }
        if size <= tiny {
            break;
        }
        previous = size;
    }

    let omega = z - (nu * T::lit(0.5) + T::lit(0.25)) * T::PI();
    let (s, c) = omega.sin_cos();
    let amp = (T::lit(2.0) / (T::PI() * z)).sqrt();
    (amp * (p * c - q * s), amp * (p * s + q * c))
}
