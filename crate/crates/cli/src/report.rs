//! CSV and JSON encodings of distributions and sweep reports.
//!
//! CSV numbers carry 17 significant digits and JSON numbers use the shortest
//! round-tripping form, so parsing either output recovers every value exactly.

use qwalk_core::WalkDistribution;
use serde::{Deserialize, Serialize};

use crate::config::{DistConfig, SweepConfig};
use crate::error::{CliError, Result};
use crate::run::ReportRow;

pub const DIST_HEADER: [&str; 2] = ["k", "probability"];
pub const SWEEP_HEADER: [&str; 5] = ["time", "ks", "m2", "m4", "stddev_ratio"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistRow {
    pub k: i64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistReport {
    pub config: DistConfig,
    pub rows: Vec<DistRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub rows: Vec<ReportRow>,
}

pub fn dist_rows(dist: &WalkDistribution) -> Vec<DistRow> {
    dist.iter()
        .map(|(k, probability)| DistRow { k, probability })
        .collect()
}

/// Scientific notation with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn optional(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>> {
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

pub fn dist_csv(rows: &[DistRow]) -> Result<Vec<u8>> {
    let mut w = writer();
    w.write_record(DIST_HEADER)?;
    for r in rows {
        w.write_record([r.k.to_string(), format_float(r.probability)])?;
    }
    finish(w)
}

pub fn sweep_csv(rows: &[ReportRow]) -> Result<Vec<u8>> {
    let mut w = writer();
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            format_float(r.time),
            optional(r.ks),
            optional(r.m2),
            optional(r.m4),
            optional(r.stddev_ratio),
        ])?;
    }
    finish(w)
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

pub fn dist_json(report: &DistReport) -> Result<Vec<u8>> {
    to_json(report)
}

pub fn sweep_json(report: &SweepReport) -> Result<Vec<u8>> {
    to_json(report)
}

fn reader<'a>(input: &'a [u8], header: &[&str]) -> Result<csv::Reader<&'a [u8]>> {
    let mut r = csv::Reader::from_reader(input);
    let found = r.headers()?;
    if found.iter().ne(header.iter().copied()) {
        return Err(CliError::Usage(format!(
            "unexpected csv header `{}`, expected `{}`",
            found.iter().collect::<Vec<_>>().join(","),
            header.join(",")
        )));
    }
    Ok(r)
}

fn parse_field<T: std::str::FromStr>(field: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| CliError::Usage(format!("malformed csv field `{field}`")))
}

fn parse_optional(field: &str) -> Result<Option<f64>> {
    if field.is_empty() {
        Ok(None)
    } else {
        parse_field(field).map(Some)
    }
}

pub fn parse_dist_csv(input: &[u8]) -> Result<Vec<DistRow>> {
    let mut rows = Vec::new();
    for record in reader(input, &DIST_HEADER)?.records() {
        let record = record?;
        rows.push(DistRow {
            k: parse_field(&record[0])?,
            probability: parse_field(&record[1])?,
        });
    }
    Ok(rows)
}

pub fn parse_sweep_csv(input: &[u8]) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for record in reader(input, &SWEEP_HEADER)?.records() {
        let record = record?;
        rows.push(ReportRow {
            time: parse_field(&record[0])?,
            ks: parse_optional(&record[1])?,
            m2: parse_optional(&record[2])?,
            m4: parse_optional(&record[3])?,
            stddev_ratio: parse_optional(&record[4])?,
        });
    }
    Ok(rows)
}

pub fn parse_dist_json(input: &[u8]) -> Result<DistReport> {
    Ok(serde_json::from_slice(input)?)
}

pub fn parse_sweep_json(input: &[u8]) -> Result<SweepReport> {
    Ok(serde_json::from_slice(input)?)
}
