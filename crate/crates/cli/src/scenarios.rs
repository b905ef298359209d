// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;
use wipe_core::models::{
    maximally_mixed, qubit_initial_state, qubit_qubit_hamiltonian, spin_boson_environment,
    spin_boson_hamiltonian, spin_boson_initial_state, two_spin_environment, two_spin_hamiltonian,
    two_spin_initial_state,
};
use wipe_core::stepper::default_record_every;
use wipe_core::{
    decoherence_factors, eta, log_rate, recorded_steps, run, Integrity, ObservableSpec,
    QubitQubitModel, SimulationParams, SpinBosonModel, TwoSpinTwoModeModel,
};

use crate::config::{Mode, Scenario, ScenarioConfig};
use crate::error::{Result, SimError};
use crate::table::{p_header, ResultTable};

pub const THREADS_ENV: &str = "WIPE_SIM_THREADS";

/// Integrity figures of one numeric trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryReport {
    pub p: f64,
    pub integrity: Integrity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutput {
    pub table: ResultTable,
    /// One entry per numeric trajectory, in `p_list` order.
    pub reports: Vec<TrajectoryReport>,
}

pub fn run_scenario(cfg: &ScenarioConfig) -> Result<ScenarioOutput> {
    cfg.validate()?;
    match cfg.scenario {
        Scenario::FactorsCurve => Ok(ScenarioOutput {
            table: run_factors_curve(cfg)?,
            reports: Vec::new(),
        }),
        Scenario::QubitQubit => run_qubit_qubit(cfg),
        Scenario::SpinBoson => run_spin_boson(cfg),
        Scenario::TwoSpinNegativity => run_two_spin_negativity(cfg),
    }
}

pub const FACTOR_HEADERS: [&str; 5] = [
    "neg_ln_x_over_c",
    "re_r_plus_over_c",
    "re_r_minus_over_c",
    "im_r_plus_over_c",
    "im_r_minus_over_c",
];

/// Decoherence factors scaled by `c` over a grid of `-ln(x)/c`.
pub fn run_factors_curve(cfg: &ScenarioConfig) -> Result<ResultTable> {
    cfg.validate()?;
    let c = cfg.c * cfg.angular_factor;
    let n = cfg.grid_points;
    let step = (cfg.grid_max - cfg.grid_min) / (n - 1) as f64;
    let grid: Vec<f64> = (0..n).map(|k| cfg.grid_min + k as f64 * step).collect();
    let mut cols: Vec<Vec<f64>> = (0..4).map(|_| Vec::with_capacity(n)).collect();
    for &s in &grid {
        let r = decoherence_factors(-s * c, c);
        cols[0].push(r.r_plus.re / c);
        cols[1].push(r.r_minus.re / c);
        cols[2].push(r.r_plus.im / c);
        cols[3].push(r.r_minus.im / c);
    }
    let columns = FACTOR_HEADERS[1..]
        .iter()
        .map(|h| h.to_string())
        .zip(cols)
        .collect();
    ResultTable::from_columns(FACTOR_HEADERS[0], grid, columns)
}

fn sim_params(cfg: &ScenarioConfig, p: f64) -> wipe_core::Result<SimulationParams> {
    let params = SimulationParams::for_horizon(p, cfg.tau, cfg.dt, cfg.t_max)?;
    Ok(match cfg.record_every {
        Some(k) => params.with_record_every(k),
        None => params,
    })
}

fn time_axis(cfg: &ScenarioConfig) -> Vec<f64> {
    let steps = (cfg.t_max / cfg.dt).round() as usize;
    let every = cfg
        .record_every
        .unwrap_or_else(|| default_record_every(steps));
    recorded_steps(steps, every)
        .into_iter()
        .map(|k| k as f64 * cfg.dt)
        .collect()
}

fn numeric_columns(
    p_list: &[f64],
    trajectory: impl Fn(f64) -> wipe_core::Result<(Vec<f64>, Integrity)> + Sync,
) -> Result<(Vec<Vec<f64>>, Vec<TrajectoryReport>)> {
    let runs = sweep(p_list, trajectory)?;
    let reports = p_list
        .iter()
        .zip(&runs)
        .map(|(&p, (_, integrity))| TrajectoryReport {
            p,
            integrity: *integrity,
        })
        .collect();
    Ok((runs.into_iter().map(|(col, _)| col).collect(), reports))
}

/// `|η(t)|` per `p`, from the closed form, the stepper, or both.
pub fn run_qubit_qubit(cfg: &ScenarioConfig) -> Result<ScenarioOutput> {
    cfg.validate()?;
    let model = QubitQubitModel::new(cfg.a, cfg.b, cfg.c * cfg.angular_factor)?;
    let times = time_axis(cfg);

    let analytic = |p: f64| -> wipe_core::Result<Vec<f64>> {
        let r = decoherence_factors(log_rate(p, cfg.tau)?, model.c);
        Ok(times.iter().map(|&t| eta(t, model.b, &r).norm()).collect())
    };
    let numeric = |p: f64| -> wipe_core::Result<(Vec<f64>, Integrity)> {
        let h = qubit_qubit_hamiltonian(&model);
        let rho0 = qubit_initial_state(&model)?;
        let sigma = maximally_mixed(2);
        let out = run(
            &h,
            &rho0,
            &sigma,
            &sim_params(cfg, p)?,
            &[ObservableSpec::Coherence01],
        )?;
        Ok((out.series[0].magnitudes(), out.integrity))
    };

    let mut columns = Vec::new();
    let mut reports = Vec::new();
    let analytic_cols = match cfg.mode {
        Mode::Analytic | Mode::Both => Some(sweep(&cfg.p_list, analytic)?),
        Mode::Numeric => None,
    };
    let numeric_cols = match cfg.mode {
        Mode::Numeric | Mode::Both => {
            let (cols, reps) = numeric_columns(&cfg.p_list, numeric)?;
            reports = reps;
            Some(cols)
        }
        Mode::Analytic => None,
    };
    for (i, &p) in cfg.p_list.iter().enumerate() {
        match (&analytic_cols, &numeric_cols) {
            (Some(a), Some(n)) => {
                columns.push((format!("{}/analytic", p_header(p)), a[i].clone()));
                columns.push((format!("{}/numeric", p_header(p)), n[i].clone()));
            }
            (Some(a), None) => columns.push((p_header(p), a[i].clone())),
            (None, Some(n)) => columns.push((p_header(p), n[i].clone())),
            (None, None) => unreachable!("mode selects at least one solution"),
        }
    }
    Ok(ScenarioOutput {
        table: ResultTable::from_columns("t", times, columns)?,
        reports,
    })
}

pub fn spin_boson_model(cfg: &ScenarioConfig) -> wipe_core::Result<SpinBosonModel> {
    SpinBosonModel::new(
        cfg.nu * cfg.angular_factor,
        cfg.temperature,
        cfg.c * cfg.angular_factor,
        cfg.truncation,
    )
}

/// `|⟨0|ρ₁|1⟩|` of the spin coupled to a thermal mode, per `p`.
pub fn run_spin_boson(cfg: &ScenarioConfig) -> Result<ScenarioOutput> {
    cfg.validate()?;
    let model = spin_boson_model(cfg)?;
    let h = spin_boson_hamiltonian(&model)?;
    let rho0 = spin_boson_initial_state(&model)?;
    let sigma = spin_boson_environment(&model)?;
    let (cols, reports) = numeric_columns(&cfg.p_list, |p| {
        let out = run(
            &h,
            &rho0,
            &sigma,
            &sim_params(cfg, p)?,
            &[ObservableSpec::Coherence01],
        )?;
        Ok((out.series[0].magnitudes(), out.integrity))
    })?;
    finish(cfg, cols, reports)
}

pub fn two_spin_model(cfg: &ScenarioConfig) -> wipe_core::Result<TwoSpinTwoModeModel> {
    let m = TwoSpinTwoModeModel {
        nu0: cfg.nu0 * cfg.angular_factor,
        nu1: cfg.nu1 * cfg.angular_factor,
        a01: cfg.a01 * cfg.angular_factor,
        temperature: cfg.temperature,
        c0: cfg.c0 * cfg.angular_factor,
        c1: cfg.c1 * cfg.angular_factor,
        truncation0: cfg.truncation0,
        truncation1: cfg.truncation1,
    };
    m.validate()?;
    Ok(m)
}

/// Negativity of the spin pair, each spin coupled to its own mode, per `p`.
pub fn run_two_spin_negativity(cfg: &ScenarioConfig) -> Result<ScenarioOutput> {
    cfg.validate()?;
    let model = two_spin_model(cfg)?;
    let h = two_spin_hamiltonian(&model)?;
    let rho0 = two_spin_initial_state(&model)?;
    let sigma = two_spin_environment(&model)?;
    let obs = [ObservableSpec::spin_pair_negativity()];
    let (cols, reports) = numeric_columns(&cfg.p_list, |p| {
        let out = run(&h, &rho0, &sigma, &sim_params(cfg, p)?, &obs)?;
        Ok((out.series[0].real(), out.integrity))
    })?;
    finish(cfg, cols, reports)
}

fn finish(
    cfg: &ScenarioConfig,
    cols: Vec<Vec<f64>>,
    reports: Vec<TrajectoryReport>,
) -> Result<ScenarioOutput> {
    let columns = cfg.p_list.iter().map(|&p| p_header(p)).zip(cols).collect();
    Ok(ScenarioOutput {
        table: ResultTable::from_columns("t", time_axis(cfg), columns)?,
        reports,
    })
}

/// Runs one independent job per `p`, concurrently, returning results in
/// `p_list` order. The first failure in list order is reported with its `p`.
///
/// `WIPE_SIM_THREADS`, when set, caps the worker count.
pub fn sweep<T, F>(p_list: &[f64], job: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(f64) -> wipe_core::Result<T> + Sync,
{
    if p_list.is_empty() {
        return Err(SimError::config("p_list must not be empty"));
    }
    let go = || -> Vec<wipe_core::Result<T>> { p_list.par_iter().map(|&p| job(p)).collect() };
    let results = match thread_cap()? {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| SimError::config(format!("cannot start worker pool: {e}")))?
            .install(go),
        None => go(),
    };
    p_list
        .iter()
        .zip(results)
        .map(|(&p, r)| r.map_err(|source| SimError::Trajectory { p, source }))
        .collect()
}

fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(SimError::config(format!(
                "{THREADS_ENV} must be a positive integer, got '{v}'"
            ))),
        },
    }
}
