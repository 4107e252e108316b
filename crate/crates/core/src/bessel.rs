//! Integer-order Bessel functions of the first kind.
//!
//! Rows `J_0(x) ..= J_K(x)` come from Miller's backward recurrence
//! `J_{k-1}(x) = (2k/x) J_k(x) - J_{k+1}(x)`, seeded past both the requested
//! order and the turning point `k ~ x`, then normalized against the sum rule
//! `J_0^2 + 2 sum_{k>=1} J_k^2 = 1`. The sign is fixed by the linear identity
//! `J_0 + 2 sum_{k>=1} J_{2k} = 1`. Below `x = 1` the power series is summed
//! directly.

use std::f64::consts::PI;

use crate::error::{ensure_finite, Result};
use crate::quadrature;

const SERIES_CUTOFF: f64 = 1.0;
const SERIES_TERMS: usize = 30;
const RESCALE_ABOVE: f64 = 1e100;
const RESCALE_BY: f64 = 1e-100;

/// `J_0(x) ..= J_{order_max}(x)` at a single argument.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselRow {
    argument: f64,
    values: Vec<f64>,
}

impl BesselRow {
    pub fn argument(&self) -> f64 {
        self.argument
    }

    pub fn order_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `values[k] = J_k(x)` for `k = 0..=order_max`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `J_k(x)` for any `|k| <= order_max`, using `J_{-k} = (-1)^k J_k`.
    pub fn get(&self, k: i64) -> Option<f64> {
        let n = k.unsigned_abs() as usize;
        let v = *self.values.get(n)?;
        Some(if k < 0 && n % 2 == 1 { -v } else { v })
    }

    /// `J_0^2 + 2 sum_{k=1}^{order_max} J_k^2`; tends to 1 as the row grows.
    pub fn sum_rule(&self) -> f64 {
        let tail: f64 = self.values[1..].iter().map(|v| v * v).sum();
        self.values[0] * self.values[0] + 2.0 * tail
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// Evaluates `J_k(x)` for every `0 <= k <= order_max`.
pub fn bessel_row(order_max: usize, x: f64) -> Result<BesselRow> {
    ensure_finite("x", x)?;
    let ax = x.abs();
    let mut values = if ax < SERIES_CUTOFF {
        (0..=order_max).map(|k| series(k, ax)).collect()
    } else {
        miller(order_max, ax)
    };
    if x < 0.0 {
        for (k, v) in values.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
    }
    Ok(BesselRow {
        argument: x,
        values,
    })
}

/// `J_k(x)` for any integer order `k`.
pub fn bessel_j(k: i64, x: f64) -> Result<f64> {
    let row = bessel_row(k.unsigned_abs() as usize, x)?;
    Ok(row.get(k).expect("row covers |k|"))
}

/// First order at which the backward recurrence is started.
pub fn recurrence_start(order_max: usize, x: f64) -> usize {
    let top = order_max.max(x.ceil() as usize);
    top + (10.0 * x.cbrt()).ceil() as usize + 30
}

fn miller(order_max: usize, x: f64) -> Vec<f64> {
    let start = recurrence_start(order_max, x);
    let mut values = vec![0.0; order_max + 1];
    let two_over_x = 2.0 / x;

    // `upper` holds J_{k+1}, `cur` holds J_k (unnormalized).
    let mut upper = 0.0_f64;
    let mut cur = 1e-30_f64;
    let mut sum_sq = 0.0_f64;
    let mut sum_even = 0.0_f64;
    let mut k = start;
    loop {
        if k <= order_max {
            values[k] = cur;
        }
        if k == 0 {
            sum_sq += cur * cur;
            sum_even += cur;
            break;
        }
        sum_sq += 2.0 * cur * cur;
        if k.is_multiple_of(2) {
            sum_even += 2.0 * cur;
        }
        let lower = k as f64 * two_over_x * cur - upper;
        upper = cur;
        cur = lower;
        k -= 1;
        if cur.abs() > RESCALE_ABOVE {
            cur *= RESCALE_BY;
            upper *= RESCALE_BY;
            sum_sq *= RESCALE_BY * RESCALE_BY;
            sum_even *= RESCALE_BY;
            for v in values.iter_mut().skip(k + 1) {
                *v *= RESCALE_BY;
            }
        }
    }

    let norm = sum_sq.sqrt().copysign(sum_even);
    for v in &mut values {
        *v /= norm;
    }
    values
}

/// Power series `sum_m (-1)^m (x/2)^{2m+k} / (m! (m+k)!)`.
fn series(k: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for j in 1..=k {
        lead *= half / j as f64;
        if lead == 0.0 {
            return 0.0;
        }
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..SERIES_TERMS {
        term *= q / (m as f64 * (m + k) as f64);
        sum += term;
    }
    lead * sum
}

/// `(1/pi) * integral_0^pi cos(xi sin(phi)) dphi`, which equals `J_0(xi)`.
pub fn j0_integral(xi: f64) -> Result<f64> {
    ensure_finite("xi", xi)?;
    let integral = quadrature::integrate(|phi| (xi * phi.sin()).cos(), 0.0, PI, 1e-12);
    Ok(integral / PI)
}
