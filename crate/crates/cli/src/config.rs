use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Default truncation tolerance for the Bessel windows.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Walk {
    Ctqw,
    CtqwTheta,
    Dtqw,
    ClassicalD,
    ClassicalC,
}

impl Walk {
    pub fn needs_theta(self) -> bool {
        matches!(self, Walk::CtqwTheta | Walk::Dtqw)
    }

    pub fn needs_integer_time(self) -> bool {
        matches!(self, Walk::Dtqw | Walk::ClassicalD)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Ks,
    M2,
    M4,
    Stddev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistConfig {
    pub walk: Walk,
    pub time: f64,
    pub theta: Option<f64>,
    pub tol: f64,
}

impl DistConfig {
    pub fn validate(&self) -> Result<()> {
        check_theta(self.walk, self.theta)?;
        check_tol(self.tol)?;
        check_time(self.walk, self.time, true)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub walk: Walk,
    pub times: Vec<f64>,
    pub theta: Option<f64>,
    pub metrics: Vec<Metric>,
    pub tol: f64,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(walk: Walk, times: Vec<f64>, theta: Option<f64>, metrics: Vec<Metric>) -> Self {
        Self {
            walk,
            times,
            theta,
            metrics,
            tol: DEFAULT_TOL,
            format: Format::Csv,
            out: None,
        }
    }

    pub fn wants(&self, metric: Metric) -> bool {
        self.metrics.contains(&metric)
    }

    pub fn validate(&self) -> Result<()> {
        check_theta(self.walk, self.theta)?;
        check_tol(self.tol)?;
        if self.times.is_empty() {
            return Err(CliError::Usage("at least one time is required".into()));
        }
        if self.metrics.is_empty() {
            return Err(CliError::Usage("at least one metric is required".into()));
        }
        for &t in &self.times {
            check_time(self.walk, t, false)?;
        }
        if self.times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Usage("times must be strictly increasing".into()));
        }
        Ok(())
    }
}

fn check_theta(walk: Walk, theta: Option<f64>) -> Result<()> {
    match (walk.needs_theta(), theta) {
        (true, None) => Err(CliError::Usage(format!("--theta is required for {walk}"))),
        (false, Some(_)) => Err(CliError::Usage(format!(
            "--theta is not accepted for {walk}"
        ))),
        (true, Some(th)) if !(th > 0.0 && th <= FRAC_PI_2) => Err(CliError::Usage(format!(
            "theta = {th} is outside (0, pi/2]"
        ))),
        _ => Ok(()),
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!("tol = {tol} is outside (0, 1)")))
    }
}

fn check_time(walk: Walk, t: f64, allow_zero: bool) -> Result<()> {
    let ok = t.is_finite() && (t > 0.0 || (allow_zero && t == 0.0));
    if !ok {
        let bound = if allow_zero {
            "non-negative"
        } else {
            "positive"
        };
        return Err(CliError::Usage(format!(
            "time {t} must be finite and {bound}"
        )));
    }
    if walk.needs_integer_time() && (t.fract() != 0.0 || t > u32::MAX as f64) {
        return Err(CliError::Usage(format!(
            "{walk} needs integer times, got {t}"
        )));
    }
    Ok(())
}
