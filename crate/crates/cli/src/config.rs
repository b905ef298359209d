// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario configuration.
//!
//! Config files are flat `key = value` lines; `#` starts a comment. The
//! same keys are accepted by `--set key=value` on the command line.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use wipe_core::Complex64;

use crate::error::{Result, SimError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    FactorsCurve,
    QubitQubit,
    SpinBoson,
    TwoSpinNegativity,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::FactorsCurve,
        Scenario::QubitQubit,
        Scenario::SpinBoson,
        Scenario::TwoSpinNegativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::FactorsCurve => "factors_curve",
            Scenario::QubitQubit => "qubit_qubit",
            Scenario::SpinBoson => "spin_boson",
            Scenario::TwoSpinNegativity => "two_spin_negativity",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Scenario::ALL.iter().map(|s| s.name()).collect();
                SimError::config(format!(
                    "unknown scenario '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Which qubit–qubit solution to tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Analytic,
    Numeric,
    Both,
}

impl FromStr for Mode {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Mode::Analytic),
            "numeric" => Ok(Mode::Numeric),
            "both" => Ok(Mode::Both),
            other => Err(SimError::config(format!(
                "unknown mode '{other}' (expected analytic, numeric or both)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub p_list: Vec<f64>,
    pub tau: f64,
    pub dt: f64,
    pub t_max: f64,
    /// Multiplies every frequency before use (set to 2π to read the
    /// frequencies as cycles per second).
    pub angular_factor: f64,
    pub mode: Mode,
    /// `None` picks a stride giving at most 4001 samples.
    pub record_every: Option<usize>,
    pub output_path: Option<PathBuf>,

    // qubit–qubit
    pub a: f64,
    pub b: Complex64,
    /// Coupling `c`; shared by the qubit–qubit and spin–boson models.
    pub c: f64,

    // spin–boson
    pub nu: f64,
    pub temperature: f64,
    pub truncation: usize,

    // two spins, two modes
    pub nu0: f64,
    pub nu1: f64,
    pub a01: f64,
    pub c0: f64,
    pub c1: f64,
    pub truncation0: usize,
    pub truncation1: usize,

    // factors_curve grid over -ln(x)/c
    pub grid_min: f64,
    pub grid_max: f64,
    pub grid_points: usize,
}

pub const QUBIT_P_LIST: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 0.95, 1.0];
/// The numeric scenarios add 0.99 so that it can be compared with 1.
pub const NUMERIC_P_LIST: [f64; 7] = [0.0, 0.25, 0.5, 0.75, 0.95, 0.99, 1.0];

impl ScenarioConfig {
    /// Parameter set used for each scenario when nothing is overridden.
    pub fn defaults(scenario: Scenario) -> Self {
        let base = Self {
            scenario,
            p_list: QUBIT_P_LIST.to_vec(),
            tau: 1.0e-3,
            dt: 1.0e-6,
            t_max: 1.0e-2,
            angular_factor: 1.0,
            mode: Mode::Analytic,
            record_every: None,
            output_path: None,
            a: 0.5,
            b: Complex64::new(0.5, 0.0),
            c: 1.0e3,
            nu: 3.4e10,
            temperature: 1.0e-3,
            truncation: 8,
            nu0: 3.4e10,
            nu1: 4.87e7,
            a01: 1.0e7,
            c0: 1.0e7,
            c1: 1.0e7,
            truncation0: 4,
            truncation1: 4,
            grid_min: 0.0,
            grid_max: 3.0,
            grid_points: 601,
        };
        match scenario {
            Scenario::FactorsCurve | Scenario::QubitQubit => base,
            Scenario::SpinBoson => Self {
                p_list: NUMERIC_P_LIST.to_vec(),
                tau: 1.0e-8,
                dt: 5.0e-10,
                t_max: 4.0e-7,
                c: 1.0e7,
                mode: Mode::Numeric,
                ..base
            },
            Scenario::TwoSpinNegativity => Self {
                p_list: NUMERIC_P_LIST.to_vec(),
                tau: 1.0e-8,
                dt: 5.0e-10,
                t_max: 2.0e-7,
                temperature: 1.0e-6,
                mode: Mode::Numeric,
                ..base
            },
        }
    }

    /// Applies one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "scenario" => {
                let sc: Scenario = value.parse()?;
                if sc != self.scenario {
                    return Err(SimError::config(format!(
                        "config is for scenario '{sc}' but '{}' was requested",
                        self.scenario
                    )));
                }
            }
            "p_list" => self.p_list = parse_list(key, value)?,
            "tau" => self.tau = parse_num(key, value)?,
            "dt" => self.dt = parse_num(key, value)?,
            "t_max" => self.t_max = parse_num(key, value)?,
            "angular_factor" => self.angular_factor = parse_num(key, value)?,
            "mode" => self.mode = value.parse()?,
            "record_every" => self.record_every = Some(parse_num(key, value)?),
            "output_path" => self.output_path = Some(PathBuf::from(value)),
            "a" => self.a = parse_num(key, value)?,
            "b" => self.b.re = parse_num(key, value)?,
            "b_im" => self.b.im = parse_num(key, value)?,
            "c" => self.c = parse_num(key, value)?,
            "nu" => self.nu = parse_num(key, value)?,
            "temperature" => self.temperature = parse_num(key, value)?,
            "truncation" => self.truncation = parse_num(key, value)?,
            "nu0" => self.nu0 = parse_num(key, value)?,
            "nu1" => self.nu1 = parse_num(key, value)?,
            "a01" => self.a01 = parse_num(key, value)?,
            "c0" => self.c0 = parse_num(key, value)?,
            "c1" => self.c1 = parse_num(key, value)?,
            "truncation0" => self.truncation0 = parse_num(key, value)?,
            "truncation1" => self.truncation1 = parse_num(key, value)?,
            "grid_min" => self.grid_min = parse_num(key, value)?,
            "grid_max" => self.grid_max = parse_num(key, value)?,
            "grid_points" => self.grid_points = parse_num(key, value)?,
            other => return Err(SimError::config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// Applies every assignment of a config file body.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (key, value, line) in parse_pairs(text)? {
            self.set(&key, &value).map_err(|e| SimError::ConfigLine {
                line,
                message: match e {
                    SimError::Config(m) => m,
                    other => other.to_string(),
                },
            })?;
        }
        Ok(())
    }

    /// Parses `key=value` as given to `--set`.
    pub fn apply_assignment(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| SimError::config(format!("expected key=value, got '{assignment}'")))?;
        self.set(key, value)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(SimError::config(format!("{name} must be > 0, got {v}")))
            }
        };
        positive("angular_factor", self.angular_factor)?;
        if self.scenario == Scenario::FactorsCurve {
            positive("c", self.c)?;
            if !(self.grid_min >= 0.0 && self.grid_max > self.grid_min) {
                return Err(SimError::config(format!(
                    "need 0 <= grid_min < grid_max, got {} and {}",
                    self.grid_min, self.grid_max
                )));
            }
            if self.grid_points < 2 {
                return Err(SimError::config("grid_points must be >= 2"));
            }
            return Ok(());
        }
        if self.p_list.is_empty() {
            return Err(SimError::config("p_list must not be empty"));
        }
        if let Some(p) = self.p_list.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(SimError::config(format!("p_list value {p} outside [0, 1]")));
        }
        positive("tau", self.tau)?;
        positive("dt", self.dt)?;
        if self.dt > self.tau {
            return Err(SimError::config(format!(
                "dt = {} exceeds tau = {}",
                self.dt, self.tau
            )));
        }
        if !(self.t_max >= self.dt) {
            return Err(SimError::config(format!(
                "t_max = {} is smaller than dt = {}",
                self.t_max, self.dt
            )));
        }
        if self.record_every == Some(0) {
            return Err(SimError::config("record_every must be >= 1"));
        }
        Ok(())
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| SimError::config(format!("cannot parse '{value}' for key '{key}'")))
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_num(key, s))
        .collect()
}

/// Splits a config body into `(key, value, line)` triples.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String, usize)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| SimError::ConfigLine {
            line: idx + 1,
            message: format!("expected 'key = value', got '{line}'"),
        })?;
        let key = key.trim();
        if key.is_empty() {
            return Err(SimError::ConfigLine {
                line: idx + 1,
                message: "empty key".into(),
            });
        }
        out.push((key.to_string(), value.trim().to_string(), idx + 1));
    }
    Ok(out)
}
