//! Continuous-time quantum walk on the integer line.
//!
//! The walk evolves under `U(t) = exp(i t A / 2)` where `A` is the adjacency
//! matrix of the line, starting from a walker localized at the origin. Entry
//! `(l, m)` of `U(t)` is `i^{|l-m|} J_{|l-m|}(t)`, so every quantity here
//! reduces to Bessel rows. The series and spectral oracles compute the same
//! propagator along routes that never touch a Bessel function.

mod oracle;

pub use oracle::{spectral_oracle, TruncatedPropagator};

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::bessel::{bessel_j, bessel_row, BesselRow};
use crate::distribution::WalkDistribution;
use crate::error::{ensure_finite, ensure_time, ensure_tol, QwalkError, Result};

/// A complex probability amplitude.
pub type ComplexAmp = Complex64;

/// Slack allowed on the total mass of a computed distribution.
pub const NORMALIZATION_SLACK: f64 = 1e-10;

/// Largest power accepted by [`adjacency_power_oracle`].
pub const ADJACENCY_POWER_MAX: u32 = 30;

/// `i^n` read from a four-entry table.
pub fn i_pow(n: u64) -> ComplexAmp {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Smallest window half-width `K` (starting from `t + 12 t^{1/3} + 25`) with
/// `1 - (J_0^2(t) + 2 sum_{k=1}^K J_k^2(t)) <= tol`.
pub fn truncation_radius(t: f64, tol: f64) -> Result<usize> {
    Ok(truncated_row(t, tol)?.order_max())
}

fn truncated_row(t: f64, tol: f64) -> Result<BesselRow> {
    ensure_time(t)?;
    ensure_tol(tol)?;
    let mut k = (t + 12.0 * t.cbrt() + 25.0).ceil() as usize;
    loop {
        let row = bessel_row(k, t)?;
        if 1.0 - row.sum_rule() <= tol {
            return Ok(row);
        }
        k += k / 4 + 8;
    }
}

/// Entry `(l, m)` of `U(t)`: `i^{|l-m|} J_{|l-m|}(t)`.
pub fn propagator_entry(l: i64, m: i64, t: f64) -> Result<ComplexAmp> {
    ensure_time(t)?;
    let n = l.abs_diff(m);
    let j = bessel_j(n as i64, t)?;
    Ok(i_pow(n) * j)
}

/// Entry `(0, k)` of the Taylor series `sum_n (i t/2)^n / n! A^n`, truncated
/// after `n_terms`, using `(A^n)_{0,k} = C(n, (n - |k|)/2)` when `n - |k|` is
/// even and nonnegative.
///
/// Binomial coefficients are exact 128-bit integers; a request whose
/// coefficients would overflow fails with [`QwalkError::OracleRange`].
pub fn propagator_entry_series(k: i64, t: f64, n_terms: usize) -> Result<ComplexAmp> {
    ensure_time(t)?;
    if n_terms < 1 {
        return Err(QwalkError::OutOfRange {
            name: "n_terms",
            value: n_terms as f64,
            expected: "n_terms >= 1",
        });
    }
    let dist = k.unsigned_abs();
    let half_t = 0.5 * t;
    let mut coeff = 1.0_f64; // (t/2)^n / n!
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..=n_terms as u64 {
        if n > 0 {
            coeff *= half_t / n as f64;
        }
        if n < dist || (n - dist) % 2 == 1 {
            continue;
        }
        let paths = binomial_u128(n, (n - dist) / 2).ok_or_else(|| {
            QwalkError::OracleRange(format!(
                "C({n}, {}) overflows 128-bit integers; lower n_terms",
                (n - dist) / 2
            ))
        })?;
        sum += i_pow(n) * (coeff * paths as f64);
    }
    Ok(sum)
}

fn binomial_u128(n: u64, r: u64) -> Option<u128> {
    let r = r.min(n - r);
    let mut c: u128 = 1;
    for i in 0..r {
        // c * (n - i) is divisible by (i + 1) at every step.
        c = c.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(c)
}

/// Row `(A^n)_{0,k}` for `k = -window..=window`, built by convolving the
/// origin indicator `n` times with the stencil `[1, 0, 1]`.
pub fn adjacency_power_oracle(n: u32, window: usize) -> Result<Vec<u64>> {
    if n > ADJACENCY_POWER_MAX {
        return Err(QwalkError::OracleRange(format!(
            "adjacency power {n} exceeds {ADJACENCY_POWER_MAX}"
        )));
    }
    if window < n as usize {
        return Err(QwalkError::OutOfRange {
            name: "window",
            value: window as f64,
            expected: "window >= n",
        });
    }
    let width = 2 * window + 1;
    let mut row = vec![0u64; width];
    row[window] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; width];
        for (i, &v) in row.iter().enumerate() {
            if v == 0 {
                continue;
            }
            if i > 0 {
                next[i - 1] += v;
            }
            if i + 1 < width {
                next[i + 1] += v;
            }
        }
        row = next;
    }
    Ok(row)
}

/// Amplitude at site `k` when the walk starts at the origin.
pub fn amplitude(k: i64, t: f64) -> Result<ComplexAmp> {
    propagator_entry(k, 0, t)
}

/// `P(k, t) = J_k^2(t)` on the window `|k| <= truncation_radius(t, tol)`.
pub fn distribution(t: f64, tol: f64) -> Result<WalkDistribution> {
    let row = truncated_row(t, tol)?;
    squared_row(&row, t)
}

fn squared_row(row: &BesselRow, time: f64) -> Result<WalkDistribution> {
    let radius = row.order_max();
    let values = row.values();
    let mut probs = Vec::with_capacity(2 * radius + 1);
    probs.extend(values.iter().rev().map(|v| v * v));
    probs.extend(values[1..].iter().map(|v| v * v));
    let total: f64 = probs.iter().sum();
    if total > 1.0 + NORMALIZATION_SLACK {
        return Err(QwalkError::Normalization {
            total,
            tolerance: NORMALIZATION_SLACK,
        });
    }
    Ok(WalkDistribution::new(
        -(radius as i64),
        probs,
        time,
        (1.0 - total).max(0.0),
    ))
}

/// The `U(theta)`-coin walk in its continuum limit: `P(k, t) = J_k^2(t cos theta)`,
/// recorded at time `t`.
pub fn distribution_theta(t: f64, theta: f64, tol: f64) -> Result<WalkDistribution> {
    ensure_time(t)?;
    ensure_finite("theta", theta)?;
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(QwalkError::OutOfRange {
            name: "theta",
            value: theta,
            expected: "0 < theta < pi/2",
        });
    }
    let row = truncated_row(t * theta.cos(), tol)?;
    squared_row(&row, t)
}

/// Characteristic function `E[e^{i xi X_t}] = J_0(t sqrt(2 (1 - cos xi)))`.
pub fn char_fn_closed(xi: f64, t: f64) -> Result<ComplexAmp> {
    ensure_finite("xi", xi)?;
    ensure_time(t)?;
    // 2(1 - cos xi) = 4 sin^2(xi/2) without the cancellation near xi = 0
    let arg = 2.0 * t * (0.5 * xi).sin().abs();
    Ok(Complex64::new(bessel_j(0, arg)?, 0.0))
}

/// Characteristic function summed directly over the truncated distribution.
pub fn char_fn_direct(xi: f64, t: f64, tol: f64) -> Result<ComplexAmp> {
    ensure_finite("xi", xi)?;
    let dist = distribution(t, tol)?;
    Ok(dist
        .iter()
        .map(|(k, p)| Complex64::from_polar(p, k as f64 * xi))
        .sum())
}

fn validate_decay_args(c: f64, t: f64) -> Result<usize> {
    ensure_finite("c", c)?;
    ensure_finite("t", t)?;
    if !(c > 0.0 && c < 1.0) {
        return Err(QwalkError::OutOfRange {
            name: "c",
            value: c,
            expected: "0 < c < 1",
        });
    }
    let order = (c * t).floor();
    if !(t > 0.0 && order >= 1.0) {
        return Err(QwalkError::OutOfRange {
            name: "c*t",
            value: c * t,
            expected: "c*t >= 1",
        });
    }
    Ok(order as usize)
}

/// `J_{[ct]}^2(t)`, the mass at the site a fraction `c` of the way to the
/// light cone.
pub fn amplitude_decay_check(c: f64, t: f64) -> Result<f64> {
    let order = validate_decay_args(c, t)?;
    let j = bessel_j(order as i64, t)?;
    Ok(j * j)
}

/// Large-`t` envelope `(2 / (pi [ct])) * (2c / sqrt(1 - c^2))` for
/// [`amplitude_decay_check`].
pub fn decay_bound(c: f64, t: f64) -> Result<f64> {
    let order = validate_decay_args(c, t)? as f64;
    Ok(4.0 * c / (std::f64::consts::PI * order * (1.0 - c * c).sqrt()))
}
