//! Shared inputs for the criterion benchmarks.

/// Times at which the continuous-walk kernels are benchmarked.
pub const CTQW_TIMES: [f64; 3] = [10.0, 100.0, 1000.0];

/// Step counts for the coined walk.
pub const DTQW_STEPS: [u64; 3] = [100, 400, 1000];

/// Truncation tolerance used throughout.
pub const TOL: f64 = 1e-12;
