use thiserror::Error;

/// Errors raised by the walk and special-function routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QwalkError {
    #[error("argument `{name}` must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("argument `{name}` = {value} is out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("oracle range exceeded: {0}")]
    OracleRange(String),

    #[error("normalization failure: total mass {total} exceeds 1 by more than {tolerance}")]
    Normalization { total: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, QwalkError>;

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(QwalkError::NonFinite { name, value })
    }
}

pub(crate) fn ensure_tol(tol: f64) -> Result<()> {
    ensure_finite("tol", tol)?;
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(QwalkError::OutOfRange {
            name: "tol",
            value: tol,
            expected: "0 < tol < 1",
        })
    }
}

pub(crate) fn ensure_time(t: f64) -> Result<()> {
    ensure_finite("t", t)?;
    if t >= 0.0 {
        Ok(())
    } else {
        Err(QwalkError::OutOfRange {
            name: "t",
            value: t,
            expected: "t >= 0",
        })
    }
}
