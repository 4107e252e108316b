//! Limit laws for rescaled walk positions and the metrics used to compare a
//! finite-time distribution against them.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2};

use statrs::function::erf::erfc;

use crate::distribution::WalkDistribution;
use crate::error::{ensure_finite, QwalkError, Result};
use crate::quadrature;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitLaw {
    /// Density `1 / (pi sqrt(r^2 - x^2))` on `(-r, r)`.
    Arcsine { radius: f64 },
    /// Density `1 / (pi (1 - x^2) sqrt(1 - 2x^2))` on `(-1/√2, 1/√2)`.
    KonnoHadamard,
    /// Centered normal with standard deviation `sigma`.
    Gaussian { sigma: f64 },
}

impl LimitLaw {
    pub fn arcsine(radius: f64) -> Result<Self> {
        positive("radius", radius)?;
        Ok(Self::Arcsine { radius })
    }

    pub fn gaussian(sigma: f64) -> Result<Self> {
        positive("sigma", sigma)?;
        Ok(Self::Gaussian { sigma })
    }

    /// Half-width of the support; infinite for the Gaussian.
    pub fn support_radius(&self) -> f64 {
        match *self {
            Self::Arcsine { radius } => radius,
            Self::KonnoHadamard => FRAC_1_SQRT_2,
            Self::Gaussian { .. } => f64::INFINITY,
        }
    }
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    ensure_finite(name, v)?;
    if v > 0.0 {
        Ok(())
    } else {
        Err(QwalkError::OutOfRange {
            name,
            value: v,
            expected: "> 0",
        })
    }
}

/// Density of `law` at `x`: zero outside the support, `+inf` at an endpoint
/// where the density diverges.
pub fn density(law: LimitLaw, x: f64) -> f64 {
    match law {
        LimitLaw::Arcsine { radius } => {
            let ax = x.abs();
            if ax > radius {
                0.0
            } else if ax == radius {
                f64::INFINITY
            } else {
                1.0 / (PI * ((radius - ax) * (radius + ax)).sqrt())
            }
        }
        LimitLaw::KonnoHadamard => {
            let ax = x.abs();
            if ax > FRAC_1_SQRT_2 {
                0.0
            } else if ax == FRAC_1_SQRT_2 {
                f64::INFINITY
            } else {
                let x2 = x * x;
                1.0 / (PI * (1.0 - x2) * (1.0 - 2.0 * x2).sqrt())
            }
        }
        LimitLaw::Gaussian { sigma } => {
            let z = x / sigma;
            (-0.5 * z * z).exp() / (sigma * (2.0 * PI).sqrt())
        }
    }
}

pub fn cdf(law: LimitLaw, x: f64) -> f64 {
    match law {
        LimitLaw::Arcsine { radius } => 0.5 + (x / radius).clamp(-1.0, 1.0).asin() / PI,
        LimitLaw::KonnoHadamard => {
            if x <= -FRAC_1_SQRT_2 {
                0.0
            } else if x >= FRAC_1_SQRT_2 {
                1.0
            } else {
                0.5 + (x / (1.0 - 2.0 * x * x).sqrt()).atan() / PI
            }
        }
        LimitLaw::Gaussian { sigma } => 0.5 * erfc(-x / (sigma * SQRT_2)),
    }
}

/// `(order - 1)!! / order!!` for even `order`.
fn double_factorial_ratio(order: u32) -> f64 {
    (1..=order / 2)
        .map(|j| (2 * j - 1) as f64 / (2 * j) as f64)
        .product()
}

/// `E[X^order]` under `law`, for even positive `order`. Odd moments vanish by
/// symmetry and are not served here.
pub fn limit_moment(law: LimitLaw, order: u32) -> Result<f64> {
    if order == 0 || order % 2 == 1 {
        return Err(QwalkError::OutOfRange {
            name: "order",
            value: order as f64,
            expected: "even order >= 2",
        });
    }
    Ok(match law {
        LimitLaw::Arcsine { radius } => radius.powi(order as i32) * double_factorial_ratio(order),
        LimitLaw::KonnoHadamard => quadrature_moment(law, order),
        LimitLaw::Gaussian { sigma } => {
            let odd_df: f64 = (1..=order / 2).map(|j| (2 * j - 1) as f64).product();
            sigma.powi(order as i32) * odd_df
        }
    })
}

/// `integral x^order density(x) dx` by composite Gauss–Legendre. The bounded
/// laws are integrated in an angle variable that absorbs the endpoint
/// singularity: `x = r sin u` for the arcsine law and `x = sin(u)/√2` for the
/// Hadamard law.
pub fn quadrature_moment(law: LimitLaw, order: u32) -> f64 {
    let p = order as i32;
    match law {
        LimitLaw::Arcsine { radius } => {
            let f = |u: f64| (radius * u.sin()).powi(p) / PI;
            quadrature::integrate(f, -FRAC_PI_2, FRAC_PI_2, 1e-15)
        }
        LimitLaw::KonnoHadamard => {
            let f = |u: f64| {
                let s = u.sin();
                (s * FRAC_1_SQRT_2).powi(p) / (SQRT_2 * PI * (1.0 - 0.5 * s * s))
            };
            quadrature::integrate(f, -FRAC_PI_2, FRAC_PI_2, 1e-15)
        }
        LimitLaw::Gaussian { sigma } => {
            let f = |x: f64| x.powi(p) * density(law, x);
            let reach = 14.0 * sigma;
            quadrature::integrate(f, -reach, reach, 1e-15)
        }
    }
}

/// `sum_k (k / scale)^order P(k)` over the stored window.
pub fn empirical_moment(dist: &WalkDistribution, scale: f64, order: u32) -> Result<f64> {
    positive("scale", scale)?;
    Ok(dist
        .iter()
        .map(|(k, p)| (k as f64 / scale).powi(order as i32) * p)
        .sum())
}

/// Kolmogorov distance between the law of `X / scale` and `law`.
///
/// The empirical CDF is right-continuous with atoms at `k / scale`; both
/// one-sided limits are compared at every atom, which attains the supremum
/// because the reference CDF is continuous and nondecreasing.
pub fn ks_distance(dist: &WalkDistribution, scale: f64, law: LimitLaw) -> Result<f64> {
    positive("scale", scale)?;
    let mut below = 0.0_f64;
    let mut worst = 0.0_f64;
    for (k, p) in dist.iter() {
        let f = cdf(law, k as f64 / scale);
        let above = below + p;
        worst = worst.max((below - f).abs()).max((above - f).abs());
        below = above;
    }
    // beyond the last atom the reference CDF climbs to 1
    worst = worst.max((1.0 - below).abs());
    Ok(worst.clamp(0.0, 1.0))
}

/// Per-time convergence metrics of one walk against its limit law.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub walk_id: String,
    pub times: Vec<f64>,
    pub ks: Vec<f64>,
    /// Empirical minus limit moment, keyed by (even) order.
    pub moment_errors: BTreeMap<u32, Vec<f64>>,
    /// `stddev / scale`.
    pub stddev_ratio: Vec<f64>,
}

impl ConvergenceReport {
    pub fn new(walk_id: impl Into<String>, moment_orders: &[u32]) -> Self {
        Self {
            walk_id: walk_id.into(),
            times: Vec::new(),
            ks: Vec::new(),
            moment_errors: moment_orders.iter().map(|&m| (m, Vec::new())).collect(),
            stddev_ratio: Vec::new(),
        }
    }

    /// Appends the metrics of `dist` rescaled by `scale`.
    pub fn record(&mut self, dist: &WalkDistribution, scale: f64, law: LimitLaw) -> Result<()> {
        let ks = ks_distance(dist, scale, law)?;
        let mut errors = Vec::with_capacity(self.moment_errors.len());
        for &order in self.moment_errors.keys() {
            let err = empirical_moment(dist, scale, order)? - limit_moment(law, order)?;
            errors.push(err);
        }
        self.times.push(dist.time());
        self.ks.push(ks);
        for (series, err) in self.moment_errors.values_mut().zip(errors) {
            series.push(err);
        }
        self.stddev_ratio.push(dist.stddev() / scale);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}
