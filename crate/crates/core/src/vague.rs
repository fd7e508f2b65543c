//! Vague values `(t, f)` and their connectives.
//!
//! A vague value carries a truth membership `t` (evidence for) and a false
//! membership `f` (evidence against) with `t + f <= 1`; the actual grade is
//! bounded by the span `[t, 1 - f]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::curve::StepCurve;

/// Slack allowed on `t + f <= 1` for values coming out of floating arithmetic.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VagueError {
    #[error("vague value ({t}, {f}) violates 0 <= t, 0 <= f, t + f <= 1")]
    ConstraintViolation { t: f64, f: f64 },
    #[error("hedge exponent must be a positive finite number, got {0}")]
    InvalidHedge(f64),
    #[error("duplicate element {0:?} in vague set")]
    DuplicateElement(String),
    #[error("operation {0:?} needs a second operand")]
    MissingOperand(VagueOp),
    #[error("curves are defined over different universes")]
    UniverseMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VagueValue {
    t: f64,
    f: f64,
}

impl VagueValue {
    /// Totally true: `(1, 0)`, the identity of [`VagueValue::and`].
    pub const TRUE: Self = Self { t: 1.0, f: 0.0 };
    /// Totally false: `(0, 1)`, the identity of [`VagueValue::or`].
    pub const FALSE: Self = Self { t: 0.0, f: 1.0 };
    /// Total ignorance: `(0, 0)`.
    pub const UNKNOWN: Self = Self { t: 0.0, f: 0.0 };

    /// Validates a pair taken from input data; the constraint is checked exactly.
    pub fn new(t: f64, f: f64) -> Result<Self, VagueError> {
        let in_range = |x: f64| (0.0..=1.0).contains(&x);
        if in_range(t) && in_range(f) && t + f <= 1.0 {
            Ok(Self { t, f })
        } else {
            Err(VagueError::ConstraintViolation { t, f })
        }
    }

    /// Validates a pair produced by arithmetic, clamping rounding overshoot
    /// of at most [`CONSTRAINT_TOLERANCE`].
    pub fn from_computed(t: f64, f: f64) -> Result<Self, VagueError> {
        let tol = CONSTRAINT_TOLERANCE;
        let near_unit = |x: f64| x >= -tol && x <= 1.0 + tol;
        if !(near_unit(t) && near_unit(f) && t + f <= 1.0 + tol) {
            return Err(VagueError::ConstraintViolation { t, f });
        }
        let t = t.clamp(0.0, 1.0);
        let f = f.clamp(0.0, 1.0);
        let excess = t + f - 1.0;
        let f = if excess > 0.0 { (f - excess).max(0.0) } else { f };
        Ok(Self { t, f })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    /// The vague-value interval `[t, 1 - f]`.
    pub fn span(&self) -> (f64, f64) {
        (self.t, 1.0 - self.f)
    }

    /// Componentwise `(min t, max f)`.
    pub fn and(self, other: Self) -> Self {
        Self {
            t: self.t.min(other.t),
            f: self.f.max(other.f),
        }
    }

    /// Componentwise `(max t, min f)`.
    pub fn or(self, other: Self) -> Self {
        Self {
            t: self.t.max(other.t),
            f: self.f.min(other.f),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Self {
            t: self.f,
            f: self.t,
        }
    }

    /// Concentration (`exponent > 1`) or dilation (`exponent < 1`), applied
    /// to `t` and to `1 - f` alike: `(t^e, 1 - (1 - f)^e)`.
    pub fn hedge(self, exponent: f64) -> Result<Self, VagueError> {
        check_exponent(exponent)?;
        if exponent == 1.0 {
            return Ok(self);
        }
        Self::from_computed(self.t.powf(exponent), 1.0 - (1.0 - self.f).powf(exponent))
    }
}

impl fmt::Display for VagueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.t, self.f)
    }
}

pub(crate) fn check_exponent(exponent: f64) -> Result<(), VagueError> {
    if exponent.is_finite() && exponent > 0.0 {
        Ok(())
    } else {
        Err(VagueError::InvalidHedge(exponent))
    }
}

/// Linguistic gradations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HedgeKind {
    Very,
    MoreOrLess,
    Essentially,
}

impl HedgeKind {
    pub const ALL: [HedgeKind; 3] = [HedgeKind::Very, HedgeKind::MoreOrLess, HedgeKind::Essentially];

    pub fn keyword(self) -> &'static str {
        match self {
            HedgeKind::Very => "very",
            HedgeKind::MoreOrLess => "more_or_less",
            HedgeKind::Essentially => "essentially",
        }
    }
}

impl fmt::Display for HedgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for HedgeKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HedgeKind::ALL.into_iter().find(|h| h.keyword() == s).ok_or(())
    }
}

/// Exponent assigned to each hedge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HedgeExponents {
    pub very: f64,
    pub more_or_less: f64,
    // No formal definition exists for "essentially"; 3 is a placeholder.
    pub essentially: f64,
}

impl HedgeExponents {
    pub fn new(very: f64, more_or_less: f64, essentially: f64) -> Result<Self, VagueError> {
        check_exponent(very)?;
        check_exponent(more_or_less)?;
        check_exponent(essentially)?;
        Ok(Self {
            very,
            more_or_less,
            essentially,
        })
    }

    pub fn exponent(&self, kind: HedgeKind) -> f64 {
        match kind {
            HedgeKind::Very => self.very,
            HedgeKind::MoreOrLess => self.more_or_less,
            HedgeKind::Essentially => self.essentially,
        }
    }
}

impl Default for HedgeExponents {
    fn default() -> Self {
        Self {
            very: 2.0,
            more_or_less: 0.5,
            essentially: 3.0,
        }
    }
}

/// A vague set over a finite universe of named elements.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VagueSet {
    entries: Vec<(String, VagueValue)>,
}

impl VagueSet {
    pub fn new<I, S>(entries: I) -> Result<Self, VagueError>
    where
        I: IntoIterator<Item = (S, VagueValue)>,
        S: Into<String>,
    {
        let mut set = Self::default();
        for (name, value) in entries {
            set.insert(name, value)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, name: impl Into<String>, value: VagueValue) -> Result<(), VagueError> {
        let name = name.into();
        if self.get(&name).is_some() {
            return Err(VagueError::DuplicateElement(name));
        }
        self.entries.push((name, value));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<VagueValue> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    /// The vague value `[t, 1 - f]` of an element.
    pub fn vague_value(&self, name: &str) -> Option<(f64, f64)> {
        self.get(name).map(|v| v.span())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, VagueValue)> + '_ {
        self.entries.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Piecewise-constant vague membership over a continuous universe.
pub type VagueCurve = StepCurve<VagueValue>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VagueOp {
    And,
    Or,
    Not,
    Hedge(f64),
}

/// Lifts a vague connective to curves, refining breakpoints as needed.
/// `other` is required by `And`/`Or` and ignored by unary operations.
pub fn curve_pointwise(
    op: VagueOp,
    curve: &VagueCurve,
    other: Option<&VagueCurve>,
) -> Result<VagueCurve, VagueError> {
    let binary = |f: fn(VagueValue, VagueValue) -> VagueValue| {
        let rhs = other.ok_or(VagueError::MissingOperand(op))?;
        curve
            .zip_with(rhs, |a, b| f(*a, *b))
            .map(StepCurve::merged)
            .ok_or(VagueError::UniverseMismatch)
    };
    match op {
        VagueOp::And => binary(VagueValue::and),
        VagueOp::Or => binary(VagueValue::or),
        VagueOp::Not => Ok(curve.map(|v| v.not())),
        VagueOp::Hedge(e) => {
            check_exponent(e)?;
            let values = curve
                .values()
                .iter()
                .map(|v| v.hedge(e))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(StepCurve::new(curve.universe(), curve.breakpoints().to_vec(), values).merged())
        }
    }
}
