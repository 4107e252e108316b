//! Exact distributions of continuous- and discrete-time quantum walks on the
//! integer line, independent oracles for the closed forms, and the limit laws
//! the rescaled walks converge to.
//!
//! The continuous-time walk has amplitude `i^{|k|} J_{|k|}(t)` at site `k`,
//! so [`bessel`] carries most of the numerical weight. [`dtqw`] evolves the
//! coined walk step by step and [`classical`] supplies the diffusive
//! baselines. [`limit`] compares any of them against its weak limit.

pub mod bessel;
pub mod classical;
pub mod ctqw;
pub mod distribution;
pub mod dtqw;
pub mod error;
pub mod limit;
pub mod quadrature;

pub use bessel::{bessel_j, bessel_row, j0_integral, BesselRow};
pub use classical::{ctrw_distribution, srw_distribution, ClassicalKind, ClassicalSpec};
pub use ctqw::{
    adjacency_power_oracle, amplitude, amplitude_decay_check, char_fn_closed, char_fn_direct,
    decay_bound, distribution, distribution_theta, propagator_entry, propagator_entry_series,
    spectral_oracle, truncation_radius, ComplexAmp, TruncatedPropagator,
};
pub use distribution::WalkDistribution;
pub use dtqw::{
    coin_from_theta, distribution_of, evolve, hadamard, step, symmetric_initial, Coin, CoinedState,
    InitialQubit,
};
pub use error::{QwalkError, Result};
pub use limit::{
    cdf, density, empirical_moment, ks_distance, limit_moment, ConvergenceReport, LimitLaw,
};
