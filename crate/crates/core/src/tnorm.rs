//! The minimum, product and Łukasiewicz t-norms with their dual t-conorms.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::curve::{RealCurve, StepCurve};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TNormError {
    #[error("argument {0} is outside [0, 1]")]
    RangeError(f64),
    #[error("curves are defined over different universes")]
    UniverseMismatch,
    #[error("unknown t-norm {0:?} (expected min, prod or luk)")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TNormKind {
    Minimum,
    Product,
    Lukasiewicz,
}

impl TNormKind {
    pub const ALL: [TNormKind; 3] = [TNormKind::Minimum, TNormKind::Product, TNormKind::Lukasiewicz];

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            TNormKind::Minimum => "min",
            TNormKind::Product => "prod",
            TNormKind::Lukasiewicz => "luk",
        }
    }

    /// Unchecked t-norm; callers guarantee arguments in `[0, 1]`.
    pub fn tnorm(self, a: f64, b: f64) -> f64 {
        match self {
            TNormKind::Minimum => a.min(b),
            TNormKind::Product => a * b,
            TNormKind::Lukasiewicz => (a + b - 1.0).max(0.0),
        }
    }

    /// Unchecked dual t-conorm.
    pub fn tconorm(self, a: f64, b: f64) -> f64 {
        match self {
            TNormKind::Minimum => a.max(b),
            TNormKind::Product => a + b - a * b,
            TNormKind::Lukasiewicz => (a + b).min(1.0),
        }
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for TNormKind {
    type Err = TNormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" | "minimum" => Ok(TNormKind::Minimum),
            "prod" | "product" => Ok(TNormKind::Product),
            "luk" | "lukasiewicz" => Ok(TNormKind::Lukasiewicz),
            other => Err(TNormError::UnknownKind(other.to_owned())),
        }
    }
}

fn check_unit(x: f64) -> Result<f64, TNormError> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(TNormError::RangeError(x))
    }
}

pub fn tnorm_apply(kind: TNormKind, a: f64, b: f64) -> Result<f64, TNormError> {
    Ok(kind.tnorm(check_unit(a)?, check_unit(b)?))
}

pub fn tconorm_apply(kind: TNormKind, a: f64, b: f64) -> Result<f64, TNormError> {
    Ok(kind.tconorm(check_unit(a)?, check_unit(b)?))
}

fn zip_checked(
    a: &RealCurve,
    b: &RealCurve,
    op: impl Fn(f64, f64) -> Result<f64, TNormError>,
) -> Result<RealCurve, TNormError> {
    let mut err = None;
    let curve = a
        .zip_with(b, |&x, &y| {
            op(x, y).unwrap_or_else(|e| {
                err.get_or_insert(e);
                f64::NAN
            })
        })
        .ok_or(TNormError::UniverseMismatch)?;
    match err {
        Some(e) => Err(e),
        None => Ok(curve.merged()),
    }
}

/// Pointwise t-norm over the common refinement of both curves.
pub fn curve_tnorm(kind: TNormKind, a: &RealCurve, b: &RealCurve) -> Result<RealCurve, TNormError> {
    zip_checked(a, b, |x, y| tnorm_apply(kind, x, y))
}

pub fn curve_tconorm(kind: TNormKind, a: &RealCurve, b: &RealCurve) -> Result<RealCurve, TNormError> {
    zip_checked(a, b, |x, y| tconorm_apply(kind, x, y))
}

/// Standard negation `1 - x`.
pub fn curve_complement(a: &RealCurve) -> RealCurve {
    a.map(|x| 1.0 - x)
}

/// Pointwise power `x^exponent`.
pub fn curve_power(a: &RealCurve, exponent: f64) -> RealCurve {
    if exponent == 1.0 {
        return a.clone();
    }
    StepCurve::new(
        a.universe(),
        a.breakpoints().to_vec(),
        a.values().iter().map(|x| x.powf(exponent)).collect(),
    )
    .merged()
}
