use std::f64::consts::PI;

use num_complex::Complex64;

use super::ComplexAmp;
use crate::error::{ensure_time, QwalkError, Result};

/// `exp(i t A_N / 2)` for the path graph on `N` vertices, a finite window
/// onto the infinite-line propagator.
#[derive(Debug, Clone)]
pub struct TruncatedPropagator {
    size: usize,
    time: f64,
    entries: Vec<ComplexAmp>,
}

impl TruncatedPropagator {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Entry at zero-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> ComplexAmp {
        self.entries[row * self.size + col]
    }

    /// Entry indexed by site offsets from the central vertex.
    pub fn centered(&self, l: i64, m: i64) -> Option<ComplexAmp> {
        let half = (self.size / 2) as i64;
        if l.abs() > half || m.abs() > half {
            return None;
        }
        Some(self.entry((l + half) as usize, (m + half) as usize))
    }

    /// Largest entry of `|U U^* - I|`.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.size;
        let mut worst = 0.0_f64;
        for a in 0..n {
            let ra = &self.entries[a * n..(a + 1) * n];
            for b in a..n {
                let rb = &self.entries[b * n..(b + 1) * n];
                let dot: Complex64 = ra.iter().zip(rb).map(|(x, y)| x * y.conj()).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

/// Builds the path-graph propagator from the exact spectrum of `A_N`:
/// eigenvalues `2 cos(j pi / (N+1))` and eigenvectors
/// `sqrt(2/(N+1)) sin(j k pi / (N+1))`, `j, k = 1..=N`.
pub fn spectral_oracle(size: usize, t: f64) -> Result<TruncatedPropagator> {
    ensure_time(t)?;
    if size == 0 || size.is_multiple_of(2) {
        return Err(QwalkError::OutOfRange {
            name: "size",
            value: size as f64,
            expected: "odd size >= 1",
        });
    }
    let n = size;
    let period = 2 * (n + 1);
    let denom = (n + 1) as f64;
    let amp = (2.0 / denom).sqrt();

    // modes[j * n + k] = v_{j+1}(k+1)
    let mut modes = vec![0.0; n * n];
    for j in 0..n {
        for k in 0..n {
            let arg = ((j + 1) * (k + 1)) % period;
            modes[j * n + k] = amp * (arg as f64 * PI / denom).sin();
        }
    }
    let phases: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(1.0, t * ((j + 1) as f64 * PI / denom).cos()))
        .collect();

    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for l in 0..n {
        for m in l..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, phase) in phases.iter().enumerate() {
                acc += phase * (modes[j * n + l] * modes[j * n + m]);
            }
            entries[l * n + m] = acc;
            entries[m * n + l] = acc;
        }
    }
    Ok(TruncatedPropagator {
        size,
        time: t,
        entries,
    })
}
