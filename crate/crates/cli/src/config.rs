//! Flat `key = value` configuration files.
//!
//! ```text
//! # universe
//! lo = 0
//! hi = 80
//! very = 2
//! more_or_less = 0.5
//! essentially = 3
//! step = 1
//! precision = 6
//! ```

use std::path::Path;

use vagueset::{HedgeExponents, Universe};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub lo: f64,
    pub hi: f64,
    pub very: f64,
    pub more_or_less: f64,
    pub essentially: f64,
    pub step: f64,
    pub precision: usize,
    pub svg_width: f64,
    pub svg_height: f64,
    pub svg_margin: f64,
}

impl Default for Config {
    fn default() -> Self {
        let hedges = HedgeExponents::default();
        Self {
            lo: 0.0,
            hi: 80.0,
            very: hedges.very,
            more_or_less: hedges.more_or_less,
            essentially: hedges.essentially,
            step: 1.0,
            precision: 6,
            svg_width: 800.0,
            svg_height: 480.0,
            svg_margin: 60.0,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: String| CliError::usage(format!("config line {}: {msg}", idx + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected `key = value`, found {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "precision" {
                cfg.precision = value
                    .parse()
                    .map_err(|_| bad(format!("precision {value:?} is not an integer")))?;
                continue;
            }
            let number: f64 = value
                .parse()
                .map_err(|_| bad(format!("{key} {value:?} is not a number")))?;
            let slot = match key {
                "lo" => &mut cfg.lo,
                "hi" => &mut cfg.hi,
                "very" => &mut cfg.very,
                "more_or_less" => &mut cfg.more_or_less,
                "essentially" => &mut cfg.essentially,
                "step" => &mut cfg.step,
                "svg_width" => &mut cfg.svg_width,
                "svg_height" => &mut cfg.svg_height,
                "svg_margin" => &mut cfg.svg_margin,
                other => return Err(bad(format!("unknown key {other:?}"))),
            };
            *slot = number;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.universe()?;
        self.hedges()?;
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(CliError::usage(format!("step must be positive, got {}", self.step)));
        }
        if self.precision < 1 {
            return Err(CliError::usage("precision must be at least 1"));
        }
        let margin_ok = self.svg_margin >= 0.0
            && self.svg_width > 2.0 * self.svg_margin
            && self.svg_height > 2.0 * self.svg_margin;
        if !margin_ok {
            return Err(CliError::usage("svg dimensions must exceed twice the margin"));
        }
        Ok(())
    }

    pub fn universe(&self) -> Result<Universe, CliError> {
        Universe::new(self.lo, self.hi).map_err(|e| CliError::usage(e.to_string()))
    }

    pub fn hedges(&self) -> Result<HedgeExponents, CliError> {
        HedgeExponents::new(self.very, self.more_or_less, self.essentially)
            .map_err(|e| CliError::usage(e.to_string()))
    }
}
