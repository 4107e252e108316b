use std::f64::consts::FRAC_PI_4;

use qwalk_core::ctqw::NORMALIZATION_SLACK;
use qwalk_core::{
    coin_from_theta, ctrw_distribution, distribution, distribution_of, distribution_theta,
    empirical_moment, evolve, hadamard, ks_distance, srw_distribution, symmetric_initial, LimitLaw,
    WalkDistribution,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{DistConfig, Metric, SweepConfig, Walk};
use crate::error::{CliError, Result};

/// Largest distance from π/4 at which a coined walk counts as the Hadamard walk.
const HADAMARD_THETA_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub time: f64,
    pub ks: Option<f64>,
    pub m2: Option<f64>,
    pub m4: Option<f64>,
    pub stddev_ratio: Option<f64>,
}

fn is_hadamard(theta: f64) -> bool {
    (theta - FRAC_PI_4).abs() <= HADAMARD_THETA_SLACK
}

/// Exact position distribution of `walk` at `time`.
pub fn run_dist(walk: Walk, time: f64, theta: Option<f64>, tol: f64) -> Result<WalkDistribution> {
    DistConfig {
        walk,
        time,
        theta,
        tol,
    }
    .validate()?;
    let dist = match walk {
        Walk::Ctqw => distribution(time, tol)?,
        Walk::CtqwTheta => distribution_theta(time, theta.expect("validated"), tol)?,
        Walk::Dtqw => {
            let theta = theta.expect("validated");
            let coin = if is_hadamard(theta) {
                hadamard()
            } else {
                coin_from_theta(theta)?
            };
            distribution_of(&evolve(time as u64, &coin, symmetric_initial()))
        }
        Walk::ClassicalD => srw_distribution(time as u64),
        Walk::ClassicalC => ctrw_distribution(time, tol)?,
    };
    let mass = dist.total() + dist.tail_bound();
    if mass.is_nan() || (mass - 1.0).abs() > NORMALIZATION_SLACK {
        return Err(CliError::Numerical(format!(
            "{walk} at time {time}: total mass {mass} differs from 1 by more than {NORMALIZATION_SLACK:e}"
        )));
    }
    Ok(dist)
}

/// Reference law and length scale used to rescale the walk at `time`.
/// `None` for a coined walk other than the Hadamard walk.
fn reference(walk: Walk, time: f64, theta: Option<f64>) -> Result<(Option<LimitLaw>, f64)> {
    Ok(match walk {
        Walk::Ctqw => (Some(LimitLaw::arcsine(1.0)?), time),
        Walk::CtqwTheta => (
            Some(LimitLaw::arcsine(theta.expect("validated").cos())?),
            time,
        ),
        Walk::Dtqw => {
            let law = is_hadamard(theta.expect("validated")).then_some(LimitLaw::KonnoHadamard);
            (law, time)
        }
        Walk::ClassicalD | Walk::ClassicalC => (Some(LimitLaw::gaussian(1.0)?), time.sqrt()),
    })
}

fn sweep_row(config: &SweepConfig, time: f64) -> Result<ReportRow> {
    let dist = run_dist(config.walk, time, config.theta, config.tol)?;
    let (law, scale) = reference(config.walk, time, config.theta)?;
    let ks = match law {
        Some(law) if config.wants(Metric::Ks) => Some(ks_distance(&dist, scale, law)?),
        _ => None,
    };
    let moment = |metric, order| -> Result<Option<f64>> {
        if config.wants(metric) {
            Ok(Some(empirical_moment(&dist, scale, order)?))
        } else {
            Ok(None)
        }
    };
    Ok(ReportRow {
        time,
        ks,
        m2: moment(Metric::M2, 2)?,
        m4: moment(Metric::M4, 4)?,
        stddev_ratio: config.wants(Metric::Stddev).then(|| dist.stddev() / scale),
    })
}

/// One row per time, computed in parallel and returned in time order.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<ReportRow>> {
    config.validate()?;
    config
        .times
        .par_iter()
        .map(|&t| sweep_row(config, t))
        .collect()
}
