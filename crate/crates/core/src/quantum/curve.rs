use super::bessel::{bessel_jy, MIN_ORDER};
use super::QuantumError;
use crate::scalar::Real;

/// Grid size used when a curve is built without an explicit size.
pub const DEFAULT_GRID_SIZE: usize = 10_000;
/// Smallest accepted grid.
pub const MIN_GRID_SIZE: usize = 100;
/// Peak densities at or below this are treated as a numerically zero curve.
const DEGENERATE_PEAK: f64 = 1e-300;

/// How the two Bessel solutions are superposed inside the well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mixing {
    /// `J_α + Y_α`.
    #[default]
    Unweighted,
    /// `J_α + β·Y_α` with `β` chosen so the amplitude vanishes at `x_r`.
    Dirichlet,
}

/// Order `α = ½·√((c² − 4γ)/c²)` of the Bessel solutions.
pub fn order_alpha<T: Real>(c: T, gamma: T) -> Result<T, QuantumError> {
    let c2 = c * c;
    let radicand = (c2 - T::lit(4.0) * gamma) / c2;
    if !(radicand > T::zero()) {
        return Err(QuantumError::ComplexOrderRegime {
            gamma: gamma.to_f64().unwrap_or(f64::NAN),
            limit: (c2 / T::lit(4.0)).to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(T::lit(0.5) * radicand.sqrt())
}

/// Parameters of one radar's confidence curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveParams<T> {
    c: T,
    big_l: T,
    gamma: T,
    x_r: T,
    mixing: Mixing,
}

impl<T: Real> CurveParams<T> {
    /// `c` scale factor, `big_l` sensitivity level `L`, `gamma` potential
    /// strength, `x_r` maximal reconnaissance distance.
    pub fn new(c: T, big_l: T, gamma: T, x_r: T) -> Result<Self, QuantumError> {
        positive("c", c)?;
        positive("L", big_l)?;
        positive("x_r", x_r)?;
        if !(gamma.is_finite() && gamma >= T::zero()) {
            return Err(invalid("gamma", gamma, "must be non-negative and finite"));
        }
        let alpha = order_alpha(c, gamma)?;
        if alpha < T::lit(MIN_ORDER) {
            return Err(QuantumError::OrderOutOfRange {
                order: alpha.to_f64().unwrap_or(f64::NAN),
                allowed: "α ≥ 1e-6 (gamma too close to c²/4)",
            });
        }
        Ok(CurveParams {
            c,
            big_l,
            gamma,
            x_r,
            mixing: Mixing::Unweighted,
        })
    }

    pub fn with_mixing(self, mixing: Mixing) -> Self {
        CurveParams { mixing, ..self }
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn big_l(&self) -> T {
        self.big_l
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn x_r(&self) -> T {
        self.x_r
    }

    pub fn mixing(&self) -> Mixing {
        self.mixing
    }

    pub fn alpha(&self) -> T {
        order_alpha(self.c, self.gamma).expect("validated on construction")
    }

    /// `√L / c`, so that the Bessel argument is `wavenumber · x`.
    pub fn wavenumber(&self) -> T {
        self.big_l.sqrt() / self.c
    }
}

fn invalid<T: Real>(name: &'static str, value: T, reason: &'static str) -> QuantumError {
    QuantumError::InvalidParameter {
        name,
        value: value.to_f64().unwrap_or(f64::NAN),
        reason,
    }
}

fn positive<T: Real>(name: &'static str, value: T) -> Result<(), QuantumError> {
    if value.is_finite() && value > T::zero() {
        Ok(())
    } else {
        Err(invalid(name, value, "must be positive and finite"))
    }
}

fn check_distance<T: Real>(x: T) -> Result<(), QuantumError> {
    if x > T::zero() {
        Ok(())
    } else {
        Err(QuantumError::NonPositiveDistance(
            x.to_f64().unwrap_or(f64::NAN),
        ))
    }
}

/// Amplitude with the mixing coefficient resolved once.
struct Amplitude<T> {
    alpha: T,
    k: T,
    beta: T,
}

impl<T: Real> Amplitude<T> {
    fn new(params: &CurveParams<T>) -> Result<Self, QuantumError> {
        let alpha = params.alpha();
        let k = params.wavenumber();
        let beta = match params.mixing {
            Mixing::Unweighted => T::one(),
            Mixing::Dirichlet => {
                let (j, y) = bessel_jy(alpha, k * params.x_r)?;
                if y == T::zero() {
                    return Err(QuantumError::DegenerateCurve(
                        "Y_α vanishes at x_r, the boundary condition cannot be met".into(),
                    ));
                }
                -j / y
            }
        };
        Ok(Amplitude { alpha, k, beta })
    }

    fn eval(&self, x: T) -> Result<T, QuantumError> {
        let (j, y) = bessel_jy(self.alpha, self.k * x)?;
        Ok(x.sqrt() * (j + self.beta * y))
    }
}

/// Amplitude formula `√x·[J_α(z) + Y_α(z)]`, `z = (√L/c)·x`, evaluated without
/// the infinite wall at `x_r`. Useful for derivative checks straddling `x_r`.
pub fn psi_interior<T: Real>(params: &CurveParams<T>, x: T) -> Result<T, QuantumError> {
    check_distance(x)?;
    Amplitude::new(params)?.eval(x)
}

/// Quasi-amplitude `ψ(x)`; exactly zero beyond `x_r`.
pub fn psi<T: Real>(params: &CurveParams<T>, x: T) -> Result<T, QuantumError> {
    check_distance(x)?;
    if x > params.x_r {
        return Ok(T::zero());
    }
    Amplitude::new(params)?.eval(x)
}

/// Probability density `P(x) = ψ(x)²`; zero beyond `x_r`.
pub fn prob_density<T: Real>(params: &CurveParams<T>, x: T) -> Result<T, QuantumError> {
    psi(params, x).map(|v| v * v)
}

/// Max-normalized density sampled on a uniform grid over `(0, x_r]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfidenceCurve<T> {
    params: CurveParams<T>,
    xs: Vec<T>,
    densities: Vec<T>,
    mus: Vec<T>,
    x0: T,
    norm: T,
}

impl<T: Real> ConfidenceCurve<T> {
    pub fn params(&self) -> &CurveParams<T> {
        &self.params
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    /// Raw `P(x)` at each grid point.
    pub fn densities(&self) -> &[T] {
        &self.densities
    }

    pub fn mus(&self) -> &[T] {
        &self.mus
    }

    /// Grid point with the highest confidence.
    pub fn x0(&self) -> T {
        self.x0
    }

    /// Peak sampled density used for normalization.
    pub fn norm(&self) -> T {
        self.norm
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn at(&self, x: T) -> Result<T, QuantumError> {
        reliability_at(self, x)
    }
}

/// Samples `P` at `x_i = x_r·i/n`, `i = 1..=n`, and scales it to peak at one.
///
/// Each grid point is evaluated independently.
pub fn confidence_curve<T: Real>(
    params: &CurveParams<T>,
    grid_size: usize,
) -> Result<ConfidenceCurve<T>, QuantumError> {
    if grid_size < MIN_GRID_SIZE {
        return Err(QuantumError::GridTooSmall {
            requested: grid_size,
            minimum: MIN_GRID_SIZE,
        });
    }
    let amplitude = Amplitude::new(params)?;
    let n = T::from_count(grid_size);
    let mut xs: Vec<T> = (1..=grid_size)
        .map(|i| params.x_r * T::from_count(i) / n)
        .collect();
    xs[grid_size - 1] = params.x_r;

    let densities = xs
        .iter()
        .map(|&x| amplitude.eval(x).map(|v| v * v))
        .collect::<Result<Vec<T>, _>>()?;

    let (argmax, norm) =
        densities
            .iter()
            .copied()
            .enumerate()
            .fold((0, T::neg_infinity()), |best, (i, p)| {
                if p > best.1 {
                    (i, p)
                } else {
                    best
                }
            });
    if !(norm.is_finite() && norm > T::lit(DEGENERATE_PEAK)) {
        return Err(QuantumError::DegenerateCurve(format!(
            "peak sampled density is {norm}"
        )));
    }
    let mut mus: Vec<T> = densities.iter().map(|&p| p / norm).collect();
    mus[argmax] = T::one();

    Ok(ConfidenceCurve {
        params: *params,
        x0: xs[argmax],
        xs,
        densities,
        mus,
        norm,
    })
}

/// Linear interpolation of `μ` at distance `x`.
///
/// Zero beyond `x_r`; between zero and the first grid point the first sample
/// is used.
pub fn reliability_at<T: Real>(curve: &ConfidenceCurve<T>, x: T) -> Result<T, QuantumError> {
    check_distance(x)?;
    if x > curve.params.x_r {
        return Ok(T::zero());
    }
    let xs = &curve.xs;
    let mus = &curve.mus;
    let i = xs.partition_point(|&g| g <= x);
    let value = if i == 0 {
        mus[0]
    } else if i == xs.len() {
        mus[xs.len() - 1]
    } else {
        let (x_lo, x_hi) = (xs[i - 1], xs[i]);
        let t = (x - x_lo) / (x_hi - x_lo);
        mus[i - 1] + t * (mus[i] - mus[i - 1])
    };
    Ok(value.max(T::zero()).min(T::one()))
}
