//! Sign of the scalar curvature from the limit-set dimension.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Values of `n/2 - 1 - d` within this band count as zero.
pub const TAU_SIGN: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SignError {
    #[error("bad dimension: {0}")]
    BadDimension(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalarSign {
    pub sign: Sign,
    /// `n/2 - 1 - d`.
    pub quantity: f64,
}

/// Sign of `n/2 - 1 - d` for a conformally flat `n`-manifold whose holonomy
/// group has limit-set dimension `d`.
pub fn scalar_sign(d: f64, n: u32) -> Result<ScalarSign, SignError> {
    if !(d >= 0.0 && d.is_finite()) {
        return Err(SignError::BadDimension(format!("limit-set dimension must be finite and >= 0, got {d}")));
    }
    if n < 3 {
        return Err(SignError::BadDimension(format!("manifold dimension must be >= 3, got {n}")));
    }
    let quantity = n as f64 / 2.0 - 1.0 - d;
    let sign = if quantity.abs() <= TAU_SIGN {
        Sign::Zero
    } else if quantity > 0.0 {
        Sign::Positive
    } else {
        Sign::Negative
    };
    Ok(ScalarSign { sign, quantity })
}

/// Diagnostic label only; nothing is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdHint {
    /// `d < 1`: handlebody or I-bundle territory.
    HandlebodyRange,
    Boundary,
    /// `d > 1`, as expected for panelled webs.
    PanelledWebConsistent,
}

pub fn dimension_threshold_check(d: f64) -> ThresholdHint {
    if (d - 1.0).abs() <= TAU_SIGN {
        ThresholdHint::Boundary
    } else if d < 1.0 {
        ThresholdHint::HandlebodyRange
    } else {
        ThresholdHint::PanelledWebConsistent
    }
}
