//! Discrete-time coined walk on the line.
//!
//! One step applies the block unitary whose `(j, j+1)` block is
//! `P = [[a, b], [0, 0]]` and whose `(j, j-1)` block is `Q = [[0, 0], [c, d]]`,
//! with `P + Q` the coin. The upper component therefore moves to the left
//! neighbour and the lower component to the right neighbour.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;

use crate::ctqw::ComplexAmp;
use crate::distribution::WalkDistribution;
use crate::error::{ensure_finite, QwalkError, Result};

/// The real coin `[[cos θ, sin θ], [sin θ, -cos θ]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coin {
    theta: f64,
    entries: [[ComplexAmp; 2]; 2],
}

impl Coin {
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn entries(&self) -> [[ComplexAmp; 2]; 2] {
        self.entries
    }

    /// Largest entry of `|C C^* - I|`.
    pub fn unitarity_residual(&self) -> f64 {
        let e = &self.entries;
        let mut worst = 0.0_f64;
        for r in 0..2 {
            for s in 0..2 {
                let dot = e[r][0] * e[s][0].conj() + e[r][1] * e[s][1].conj();
                let target = if r == s { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

pub fn coin_from_theta(theta: f64) -> Result<Coin> {
    ensure_finite("theta", theta)?;
    if !(theta > 0.0 && theta <= FRAC_PI_2) {
        return Err(QwalkError::OutOfRange {
            name: "theta",
            value: theta,
            expected: "0 < theta <= pi/2",
        });
    }
    let (s, c) = theta.sin_cos();
    let re = |x: f64| Complex64::new(x, 0.0);
    Ok(Coin {
        theta,
        entries: [[re(c), re(s)], [re(s), re(-c)]],
    })
}

/// The Hadamard coin, with every entry exactly `±1/√2`.
pub fn hadamard() -> Coin {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Coin {
        theta: FRAC_PI_4,
        entries: [[h, h], [h, -h]],
    }
}

/// Coin state of the walker at the origin before the first step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialQubit {
    pub alpha: ComplexAmp,
    pub beta: ComplexAmp,
}

impl InitialQubit {
    pub fn new(alpha: ComplexAmp, beta: ComplexAmp) -> Result<Self> {
        let norm = alpha.norm_sqr() + beta.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(QwalkError::OutOfRange {
                name: "|alpha|^2 + |beta|^2",
                value: norm,
                expected: "= 1",
            });
        }
        Ok(Self { alpha, beta })
    }
}

/// `(1/√2, i/√2)`, which makes the Hadamard walk symmetric about the origin.
pub fn symmetric_initial() -> InitialQubit {
    InitialQubit {
        alpha: Complex64::new(FRAC_1_SQRT_2, 0.0),
        beta: Complex64::new(0.0, FRAC_1_SQRT_2),
    }
}

/// Two-component amplitudes on the consecutive sites `offset, offset + 1, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinedState {
    offset: i64,
    cells: Vec<(ComplexAmp, ComplexAmp)>,
    step_count: u64,
}

impl CoinedState {
    pub fn at_origin(init: InitialQubit) -> Self {
        Self {
            offset: 0,
            cells: vec![(init.alpha, init.beta)],
            step_count: 0,
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// `(upper, lower)` amplitude pairs by site.
    pub fn cells(&self) -> &[(ComplexAmp, ComplexAmp)] {
        &self.cells
    }

    pub fn step_count(&self) -> u64 {
        self.step_count
    }

    pub fn cell(&self, k: i64) -> Option<(ComplexAmp, ComplexAmp)> {
        let i = k - self.offset;
        if i < 0 {
            return None;
        }
        self.cells.get(i as usize).copied()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.cells
            .iter()
            .map(|(u, l)| u.norm_sqr() + l.norm_sqr())
            .sum()
    }
}

/// Applies one step of the walk. The window grows by one site on each side.
pub fn step(state: &CoinedState, coin: &Coin) -> CoinedState {
    let [[a, b], [c, d]] = coin.entries;
    let zero = Complex64::new(0.0, 0.0);
    let mut cells = vec![(zero, zero); state.cells.len() + 2];
    // old index i is new index i + 1; left neighbour i, right neighbour i + 2
    for (i, &(up, lo)) in state.cells.iter().enumerate() {
        cells[i].0 += a * up + b * lo;
        cells[i + 2].1 += c * up + d * lo;
    }
    CoinedState {
        offset: state.offset - 1,
        cells,
        step_count: state.step_count + 1,
    }
}

/// `n` steps from the walker at the origin with coin state `init`.
pub fn evolve(n: u64, coin: &Coin, init: InitialQubit) -> CoinedState {
    let mut state = CoinedState::at_origin(init);
    for _ in 0..n {
        state = step(&state, coin);
    }
    state
}

/// Position measurement: `P(k) = |upper_k|^2 + |lower_k|^2`.
pub fn distribution_of(state: &CoinedState) -> WalkDistribution {
    let probs = state
        .cells
        .iter()
        .map(|(u, l)| u.norm_sqr() + l.norm_sqr())
        .collect();
    WalkDistribution::new(state.offset, probs, state.step_count as f64, 0.0)
}
