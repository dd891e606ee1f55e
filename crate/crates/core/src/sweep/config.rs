use std::fmt;

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::oracle::{TruncatedSpace, DEFAULT_N_MAX};

pub const DEFAULT_STEPS: usize = 101;

/// Closed, evenly spaced axis with both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        let axis = Self { min, max, steps };
        axis.validate()?;
        Ok(axis)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "non-finite axis bound in {self}"
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidConfig(format!(
                "axis needs at least 2 steps, got {}",
                self.steps
            )));
        }
        if self.max <= self.min {
            return Err(Error::InvalidConfig(format!(
                "degenerate axis range {self}"
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.max
                } else {
                    self.min + (self.max - self.min) * (i as f64 / last)
                }
            })
            .collect()
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] x {}", self.min, self.max, self.steps)
    }
}

/// How `g′` is chosen at each point of the `g` axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GprimeRule {
    /// `g′ = r·g`.
    Ratio(f64),
    Fixed(f64),
    /// Independent axis: the grid is the product `g × g′`.
    Axis(Axis),
}

impl fmt::Display for GprimeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GprimeRule::Ratio(r) => write!(f, "ratio {r}"),
            GprimeRule::Fixed(v) => write!(f, "fixed {v}"),
            GprimeRule::Axis(a) => write!(f, "axis {a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Numeric,
    Both,
}

impl Method {
    pub fn analytic(self) -> bool {
        matches!(self, Method::Analytic | Method::Both)
    }

    pub fn numeric(self) -> bool {
        matches!(self, Method::Numeric | Method::Both)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Analytic => "analytic",
            Method::Numeric => "numeric",
            Method::Both => "both",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Method::Analytic),
            "numeric" => Ok(Method::Numeric),
            "both" => Ok(Method::Both),
            other => Err(Error::InvalidConfig(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub omega: f64,
    pub big_omega: f64,
    pub g_axis: Axis,
    pub gprime_rule: GprimeRule,
    pub n_levels: usize,
    pub n_max: usize,
    pub method: Method,
}

impl Default for SweepConfig {
    /// `ω = 1`, `Ω = 0.3`, `g ∈ [0, 0.5]` on 101 points, `g′ = 2g`, 7 levels.
    fn default() -> Self {
        Self {
            omega: 1.0,
            big_omega: 0.3,
            g_axis: Axis {
                min: 0.0,
                max: 0.5,
                steps: DEFAULT_STEPS,
            },
            gprime_rule: GprimeRule::Ratio(2.0),
            n_levels: 7,
            n_max: DEFAULT_N_MAX,
            method: Method::Both,
        }
    }
}

impl SweepConfig {
    /// Checks axes, level counts and that every grid point is a valid
    /// parameter set.
    pub fn validate(&self) -> Result<()> {
        self.g_axis.validate()?;
        match self.gprime_rule {
            GprimeRule::Axis(a) => a.validate()?,
            GprimeRule::Ratio(v) | GprimeRule::Fixed(v) if !v.is_finite() => {
                return Err(Error::InvalidConfig(format!(
                    "non-finite g' rule {}",
                    self.gprime_rule
                )));
            }
            _ => {}
        }
        if self.n_levels == 0 {
            return Err(Error::InvalidConfig("n_levels must be at least 1".into()));
        }
        if self.n_max == 0 {
            return Err(Error::InvalidConfig("n_max must be at least 1".into()));
        }
        let space =
            TruncatedSpace::new(self.n_max).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        if self.method.numeric() && self.n_levels > space.dim() / 4 {
            return Err(Error::InvalidConfig(format!(
                "{} levels is too close to the truncation edge of n_max = {}",
                self.n_levels, self.n_max
            )));
        }
        for (g, gp) in self.grid() {
            ModelParams::new(self.omega, self.big_omega, g, gp)
                .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        }
        Ok(())
    }

    /// Grid points ordered by `(g, g′)`.
    pub fn grid(&self) -> Vec<(f64, f64)> {
        let gs = self.g_axis.points();
        match self.gprime_rule {
            GprimeRule::Ratio(r) => gs.into_iter().map(|g| (g, r * g)).collect(),
            GprimeRule::Fixed(v) => gs.into_iter().map(|g| (g, v)).collect(),
            GprimeRule::Axis(a) => {
                let gps = a.points();
                gs.iter()
                    .flat_map(|&g| gps.iter().map(move |&gp| (g, gp)))
                    .collect()
            }
        }
    }

    pub fn params(&self, g: f64, gprime: f64) -> Result<ModelParams> {
        ModelParams::new(self.omega, self.big_omega, g, gprime)
    }

    pub fn space(&self) -> Result<TruncatedSpace> {
        TruncatedSpace::new(self.n_max)
    }
}
