//! Library behind the `qwalk` binary: walk dispatch, convergence sweeps,
//! oracle checks and report encoding.

pub mod check;
pub mod config;
pub mod error;
pub mod report;
pub mod run;

pub use check::{run_check, CheckCase, CheckName, CheckReport};
pub use config::{DistConfig, Format, Metric, SweepConfig, Walk, DEFAULT_TOL};
pub use error::{CliError, Result};
pub use report::{DistReport, DistRow, SweepReport};
pub use run::{run_dist, run_sweep, ReportRow};
