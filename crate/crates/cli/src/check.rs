use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use qwalk_core::{
    adjacency_power_oracle, bessel_j, bessel_row, char_fn_closed, char_fn_direct, distribution,
    propagator_entry, propagator_entry_series, spectral_oracle, truncation_radius,
};

use crate::config::DEFAULT_TOL;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckName {
    Propagator,
    Charfn,
    Binomial,
    Normalization,
    Addition,
}

impl CheckName {
    pub const ALL: [CheckName; 5] = [
        CheckName::Propagator,
        CheckName::Charfn,
        CheckName::Binomial,
        CheckName::Normalization,
        CheckName::Addition,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Propagator => "propagator",
            CheckName::Charfn => "charfn",
            CheckName::Binomial => "binomial",
            CheckName::Normalization => "normalization",
            CheckName::Addition => "addition",
        }
    }
}

impl FromStr for CheckName {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = CheckName::ALL.iter().map(|c| c.as_str()).collect();
                CliError::Usage(format!(
                    "unknown check `{s}`, expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

/// Worst error of one group of comparisons against its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckCase {
    pub label: String,
    pub error: f64,
    pub tolerance: f64,
}

impl CheckCase {
    pub fn passed(&self) -> bool {
        self.error <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: CheckName,
    pub cases: Vec<CheckCase>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CheckCase::passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let verdict = if c.passed() { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "{verdict} {}: error {:.3e} (tolerance {:e})",
                c.label, c.error, c.tolerance
            )?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({} cases)",
            self.name.as_str(),
            self.cases.len()
        )
    }
}

fn case(label: impl Into<String>, error: f64, tolerance: f64) -> CheckCase {
    // NaN must fail, so store it as an infinite error
    let error = if error.is_nan() { f64::INFINITY } else { error };
    CheckCase {
        label: label.into(),
        error,
        tolerance,
    }
}

/// Runs the named invariant suite.
pub fn run_check(name: &str) -> Result<CheckReport> {
    let name: CheckName = name.parse()?;
    let cases = match name {
        CheckName::Propagator => propagator()?,
        CheckName::Charfn => charfn()?,
        CheckName::Binomial => binomial()?,
        CheckName::Normalization => normalization()?,
        CheckName::Addition => addition()?,
    };
    Ok(CheckReport { name, cases })
}

fn propagator() -> Result<Vec<CheckCase>> {
    let mut cases = Vec::new();
    for t in [0.5, 1.0, 5.0, 10.0, 20.0] {
        let u = spectral_oracle(401, t)?;
        let mut worst = 0.0_f64;
        for l in -20..=20 {
            for m in -20..=20 {
                let exact = propagator_entry(l, m, t)?;
                worst = worst.max((u.centered(l, m).expect("inside window") - exact).norm());
            }
        }
        cases.push(case(format!("spectral N=401 t={t}"), worst, 1e-9));
    }
    let mut worst = 0.0_f64;
    for i in 0..=40 {
        let t = 0.1 * i as f64;
        for k in -10..=10 {
            let err = (propagator_entry_series(k, t, 60)? - propagator_entry(0, k, t)?).norm();
            worst = worst.max(err);
        }
    }
    cases.push(case("series 60 terms, t <= 4, |k| <= 10", worst, 1e-10));
    Ok(cases)
}

fn charfn() -> Result<Vec<CheckCase>> {
    let mut cases = Vec::new();
    for t in [5.0, 13.0, 50.0] {
        let mut worst = 0.0_f64;
        for i in 0..64 {
            let xi = PI * i as f64 / 63.0;
            worst =
                worst.max((char_fn_direct(xi, t, DEFAULT_TOL)? - char_fn_closed(xi, t)?).norm());
        }
        cases.push(case(format!("64-point grid t={t}"), worst, 1e-9));
    }
    Ok(cases)
}

fn binomial() -> Result<Vec<CheckCase>> {
    let mut cases = Vec::new();
    for n in 1..=16u32 {
        let row = adjacency_power_oracle(n, n as usize)?;
        // row[i] is site k = i - n; nonzero iff n - k = 2n - i is even
        let mismatches = row
            .iter()
            .enumerate()
            .filter(|&(i, &v)| {
                let d = 2 * n as u64 - i as u64;
                let want = if d.is_multiple_of(2) {
                    choose(n as u64, d / 2)
                } else {
                    0
                };
                v != want
            })
            .count();
        cases.push(case(format!("A^{n} row"), mismatches as f64, 0.0));
    }
    Ok(cases)
}

fn choose(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |c, i| c * (n - i) / (i + 1))
}

fn normalization() -> Result<Vec<CheckCase>> {
    let mut cases = Vec::new();
    for t in [1.0, 10.0, 100.0, 1000.0] {
        let d = distribution(t, DEFAULT_TOL)?;
        cases.push(case(
            format!("mass at t={t}"),
            (d.total() + d.tail_bound() - 1.0).abs(),
            1e-12,
        ));
        cases.push(case(format!("tail at t={t}"), d.tail_bound(), DEFAULT_TOL));
    }
    Ok(cases)
}

/// `J_0(sqrt(a^2 + b^2 - 2ab cos xi)) = sum_k J_k(a) J_k(b) e^{ik xi}`.
fn addition() -> Result<Vec<CheckCase>> {
    let mut cases = Vec::new();
    for (a, b) in [
        (0.5, 0.5),
        (1.0, 3.0),
        (7.5, 2.25),
        (12.5, 20.0),
        (40.0, 40.0),
    ] {
        let k_max = truncation_radius(a + b, DEFAULT_TOL)?;
        let (ra, rb) = (bessel_row(k_max, a)?, bessel_row(k_max, b)?);
        let (va, vb) = (ra.values(), rb.values());
        let mut worst = 0.0_f64;
        for i in 0..=16 {
            let xi = PI * i as f64 / 16.0;
            // the +k and -k terms pair into a real cosine series
            let sum = va[0] * vb[0]
                + (1..=k_max)
                    .map(|k| 2.0 * va[k] * vb[k] * (k as f64 * xi).cos())
                    .sum::<f64>();
            let c = (a * a + b * b - 2.0 * a * b * xi.cos()).max(0.0).sqrt();
            worst = worst.max((sum - bessel_j(0, c)?).abs());
        }
        cases.push(case(format!("a={a} b={b}"), worst, 1e-9));
    }
    Ok(cases)
}
