//! Bound sweeps over the parametrized state families, written as CSV.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use oew_core::bounds::{bound_mixed, bound_pure, bound_qubit};
use oew_core::states::{isotropic_mix, pure_family_2x2, pure_family_3x3};
use thiserror::Error;

use crate::format::sig12;

pub const HEADER: [&str; 4] = ["a", "bound_thm2", "bound_thm4", "bound_thm5"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Pure2x2,
    Mixed2x2,
    Pure3x3,
    Mixed3x3,
}

impl Family {
    pub fn is_mixed(self) -> bool {
        matches!(self, Family::Mixed2x2 | Family::Mixed3x3)
    }

    fn is_qubit(self) -> bool {
        matches!(self, Family::Pure2x2 | Family::Mixed2x2)
    }
}

impl FromStr for Family {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        match s {
            "pure2x2" => Ok(Family::Pure2x2),
            "mixed2x2" => Ok(Family::Mixed2x2),
            "pure3x3" => Ok(Family::Pure3x3),
            "mixed3x3" => Ok(Family::Mixed3x3),
            other => Err(SweepError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Pure2x2 => "pure2x2",
            Family::Mixed2x2 => "mixed2x2",
            Family::Pure3x3 => "pure3x3",
            Family::Mixed3x3 => "mixed3x3",
        })
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("unknown family `{0}` (expected pure2x2, mixed2x2, pure3x3 or mixed3x3)")]
    UnknownFamily(String),
    #[error("family {0} needs --x")]
    MissingX(Family),
    #[error("--x is not accepted for pure family {0}")]
    UnexpectedX(Family),
    #[error("bad range: need finite 0 <= a-min < a-max, got [{a_min}, {a_max}]")]
    BadRange { a_min: f64, a_max: f64 },
    #[error("need at least 2 steps, got {0}")]
    BadSteps(usize),
    #[error(transparent)]
    Core(#[from] oew_core::Error),
    #[error("cannot write CSV")]
    Io(#[from] std::io::Error),
    #[error("cannot write CSV")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub family: Family,
    pub x: Option<f64>,
    pub a_min: f64,
    pub a_max: f64,
    pub steps: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        match (self.family.is_mixed(), self.x) {
            (true, None) => return Err(SweepError::MissingX(self.family)),
            (false, Some(_)) => return Err(SweepError::UnexpectedX(self.family)),
            _ => {}
        }
        let (a_min, a_max) = (self.a_min, self.a_max);
        if !(a_min.is_finite() && a_max.is_finite() && a_min >= 0.0 && a_min < a_max) {
            return Err(SweepError::BadRange { a_min, a_max });
        }
        if self.steps < 2 {
            return Err(SweepError::BadSteps(self.steps));
        }
        Ok(())
    }
}

/// One grid point. `None` marks a bound that does not apply to the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub thm2: Option<f64>,
    pub thm4: Option<f64>,
    pub thm5: Option<f64>,
}

/// `steps` points from `a_min` to `a_max`, both included.
pub fn grid(a_min: f64, a_max: f64, steps: usize) -> Vec<f64> {
    let last = steps.saturating_sub(1).max(1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                a_max
            } else {
                a_min + (a_max - a_min) * i as f64 / last
            }
        })
        .collect()
}

pub fn evaluate_point(family: Family, x: Option<f64>, a: f64) -> Result<SweepRow, SweepError> {
    let psi = match family {
        Family::Pure2x2 | Family::Mixed2x2 => pure_family_2x2(a)?,
        Family::Pure3x3 | Family::Mixed3x3 => pure_family_3x3(a)?,
    };
    let (rho, thm2) = if family.is_mixed() {
        (isotropic_mix(x.unwrap_or(0.0), &psi)?, None)
    } else {
        (psi.to_density(), Some(bound_pure(&psi)))
    };
    let thm5 = if family.is_qubit() {
        Some(bound_qubit(&rho)?)
    } else {
        None
    };
    Ok(SweepRow {
        a,
        thm2,
        thm4: Some(bound_mixed(&rho)),
        thm5,
    })
}

pub fn run(config: &SweepConfig) -> Result<Vec<SweepRow>, SweepError> {
    config.validate()?;
    grid(config.a_min, config.a_max, config.steps)
        .into_iter()
        .map(|a| evaluate_point(config.family, config.x, a))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), SweepError> {
    let cell = |v: Option<f64>| v.map(sig12).unwrap_or_default();
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(HEADER)?;
    for row in rows {
        writer.write_record([sig12(row.a), cell(row.thm2), cell(row.thm4), cell(row.thm5)])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn sweep_to_file(config: &SweepConfig, path: &Path) -> Result<Vec<SweepRow>, SweepError> {
    let rows = run(config)?;
    let mut buffer = Vec::new();
    write_csv(&rows, &mut buffer)?;
    std::fs::write(path, buffer)?;
    Ok(rows)
}
