//! Symmetric classical random walks on the line, computed exactly.

use statrs::function::gamma::ln_gamma;

use crate::distribution::WalkDistribution;
use crate::error::{ensure_finite, ensure_time, ensure_tol, QwalkError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    /// `n` independent ±1 steps.
    Discrete,
    /// ±1 jumps at the times of a Poisson process.
    Continuous,
}

/// A classical walk at a fixed horizon (a step count or a time).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalSpec {
    pub kind: ClassicalKind,
    pub horizon: f64,
    /// Jumps per unit time; only used by the continuous walk.
    pub rate: f64,
}

impl ClassicalSpec {
    pub fn discrete(n: u64) -> Self {
        Self {
            kind: ClassicalKind::Discrete,
            horizon: n as f64,
            rate: 1.0,
        }
    }

    pub fn continuous(t: f64) -> Self {
        Self {
            kind: ClassicalKind::Continuous,
            horizon: t,
            rate: 1.0,
        }
    }

    pub fn distribution(&self, tol: f64) -> Result<WalkDistribution> {
        ensure_time(self.horizon)?;
        match self.kind {
            ClassicalKind::Discrete => {
                if self.horizon.fract() != 0.0 {
                    return Err(QwalkError::OutOfRange {
                        name: "horizon",
                        value: self.horizon,
                        expected: "integer step count",
                    });
                }
                Ok(srw_distribution(self.horizon as u64))
            }
            ClassicalKind::Continuous => {
                ensure_finite("rate", self.rate)?;
                if self.rate <= 0.0 {
                    return Err(QwalkError::OutOfRange {
                        name: "rate",
                        value: self.rate,
                        expected: "rate > 0",
                    });
                }
                poissonized(self.rate * self.horizon, self.horizon, tol)
            }
        }
    }
}

/// `P(k) = C(n, (n+k)/2) / 2^n` on `[-n, n]`, zero when `k + n` is odd.
pub fn srw_distribution(n: u64) -> WalkDistribution {
    let weights = binomial_weights(n);
    let width = 2 * n as usize + 1;
    let mut probs = vec![0.0; width];
    for (j, w) in weights.into_iter().enumerate() {
        // j right-steps land on k = 2j - n, i.e. index 2j
        probs[2 * j] = w;
    }
    WalkDistribution::new(-(n as i64), probs, n as f64, 0.0)
}

/// `C(n, j) / 2^n` for `j = 0..=n`, grown outward from the central
/// coefficient by the ratio `C(n, j+1) / C(n, j) = (n - j) / (j + 1)` and
/// normalized by the total, so nothing overflows for large `n`.
fn binomial_weights(n: u64) -> Vec<f64> {
    let len = n as usize + 1;
    let mid = len / 2;
    let mut w = vec![0.0; len];
    w[mid] = 1.0;
    for j in mid..len - 1 {
        w[j + 1] = w[j] * (n - j as u64) as f64 / (j + 1) as f64;
    }
    for j in (1..=mid).rev() {
        w[j - 1] = w[j] * j as f64 / (n - j as u64 + 1) as f64;
    }
    let total: f64 = w.iter().sum();
    w.iter_mut().for_each(|v| *v /= total);
    w
}

/// The rate-1 continuous-time walk: a Poisson(t) mixture of
/// [`srw_distribution`], truncated once the omitted Poisson mass is at most
/// `tol`.
pub fn ctrw_distribution(t: f64, tol: f64) -> Result<WalkDistribution> {
    ClassicalSpec::continuous(t).distribution(tol)
}

fn poissonized(mean: f64, time: f64, tol: f64) -> Result<WalkDistribution> {
    ensure_tol(tol)?;
    if mean == 0.0 {
        return Ok(WalkDistribution::point_mass(time));
    }
    let (lo, weights) = poisson_window(mean, tol);
    let hi = lo + weights.len() as u64 - 1;
    let width = 2 * hi as usize + 1;
    let mut probs = vec![0.0; width];
    let mut mass = 0.0;
    for (i, &pw) in weights.iter().enumerate() {
        let n = lo + i as u64;
        mass += pw;
        let shift = (hi - n) as usize;
        for (j, b) in binomial_weights(n).into_iter().enumerate() {
            probs[shift + 2 * j] += pw * b;
        }
    }
    Ok(WalkDistribution::new(
        -(hi as i64),
        probs,
        time,
        (1.0 - mass).max(0.0),
    ))
}

/// Consecutive Poisson(mean) weights around the mode, extended toward the
/// heavier side until at most `tol` of the mass is left out.
fn poisson_window(mean: f64, tol: f64) -> (u64, Vec<f64>) {
    let mode = mean.floor() as u64;
    let at_mode = (-mean + mode as f64 * mean.ln() - ln_gamma(mode as f64 + 1.0)).exp();
    let mut below: Vec<f64> = Vec::new();
    let mut above: Vec<f64> = Vec::new();
    let mut total = at_mode;
    let mut lo = mode;
    let mut hi = mode;
    let mut next_down = if mode > 0 {
        at_mode * mode as f64 / mean
    } else {
        0.0
    };
    let mut next_up = at_mode * mean / (mode + 1) as f64;
    while total < 1.0 - tol {
        if next_up == 0.0 && next_down == 0.0 {
            break;
        }
        if lo > 0 && next_down >= next_up {
            total += next_down;
            below.push(next_down);
            lo -= 1;
            next_down = if lo > 0 {
                next_down * lo as f64 / mean
            } else {
                0.0
            };
        } else {
            total += next_up;
            above.push(next_up);
            hi += 1;
            next_up *= mean / (hi + 1) as f64;
        }
    }
    let mut weights: Vec<f64> = below.into_iter().rev().collect();
    weights.push(at_mode);
    weights.extend(above);
    (lo, weights)
}
