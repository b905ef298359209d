// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Unitary evolution interleaved with probabilistic replacement of the
//! environment by a fixed thermal state.
//!
//! One step of length `Δt` maps
//!
//! ```text
//! ρ ← U [ w ρ + (1 - w) Tr_env(ρ) ⊗ σ ] U^†,   U = exp(-iHΔt),   w = (1 - p)^{Δt/τ}
//! ```
//!
//! The replacement is applied first, then the conjugation. No
//! renormalisation is performed: trace drift beyond [`TRACE_DRIFT_LIMIT`]
//! aborts the run.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, tensor, unitary_exp, ComplexMatrix, SubsystemDims};
use crate::measures::ObservableSpec;
use crate::state::DensityMatrix;

pub const TRACE_DRIFT_LIMIT: f64 = 1e-9;
/// Largest allowed `max |U U^† - 1|` for the precomputed propagator.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Default cap on the number of recorded samples per run.
pub const MAX_SAMPLES: usize = 4001;

/// Per-step survival weight `x^Δt = (1 - p)^{Δt/τ}` of the un-replaced
/// environment. Exactly 0 at `p = 1`.
pub fn replacement_weight(p: f64, tau: f64, dt: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "dissipation probability {p} outside [0, 1]"
        )));
    }
    if !(tau > 0.0) || !(dt > 0.0) {
        return Err(Error::invalid(format!(
            "tau and dt must be > 0, got tau={tau}, dt={dt}"
        )));
    }
    if p == 1.0 {
        return Ok(0.0);
    }
    Ok(((dt / tau) * (-p).ln_1p()).exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationParams {
    /// Replacement probability per interval `tau`.
    pub p: f64,
    pub tau: f64,
    pub dt: f64,
    pub steps: usize,
    pub record_every: usize,
}

impl SimulationParams {
    /// Steps covering `[0, t_max]`, with `record_every` chosen so that at
    /// most [`MAX_SAMPLES`] samples are emitted.
    pub fn for_horizon(p: f64, tau: f64, dt: f64, t_max: f64) -> Result<Self> {
        if !(t_max >= 0.0) || !(dt > 0.0) {
            return Err(Error::invalid(format!(
                "need t_max >= 0 and dt > 0, got {t_max}, {dt}"
            )));
        }
        let steps = (t_max / dt).round() as usize;
        let params = Self {
            p,
            tau,
            dt,
            steps,
            record_every: default_record_every(steps),
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_record_every(self, record_every: usize) -> Self {
        Self {
            record_every,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        replacement_weight(self.p, self.tau, self.dt)?;
        if self.dt > self.tau {
            return Err(Error::invalid(format!(
                "dt = {} must not exceed tau = {}",
                self.dt, self.tau
            )));
        }
        if self.record_every == 0 {
            return Err(Error::invalid("record_every must be >= 1"));
        }
        Ok(())
    }

    pub fn total_time(&self) -> f64 {
        self.steps as f64 * self.dt
    }
}

/// Leaves room for the final step, which is always recorded.
pub fn default_record_every(steps: usize) -> usize {
    steps.div_ceil(MAX_SAMPLES - 2).max(1)
}

/// Step indices at which [`run`] records: `0`, every `record_every`-th step
/// and the last step.
pub fn recorded_steps(steps: usize, record_every: usize) -> Vec<usize> {
    let every = record_every.max(1);
    let mut out: Vec<usize> = (0..=steps).step_by(every).collect();
    if steps % every != 0 {
        out.push(steps);
    }
    out
}

/// Worst-case numerical health of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrity {
    /// `max |U U^† - 1|`.
    pub propagator_unitarity: f64,
    /// Largest `|Tr ρ - Tr ρ₀|` seen after any step.
    pub max_trace_drift: f64,
    /// Largest `max |ρ - ρ^†|` seen after any step.
    pub max_hermiticity_deviation: f64,
    /// Smallest eigenvalue of the joint state over recorded times.
    pub min_eigenvalue: f64,
}

/// Joint state plus the fixed ingredients of the evolution map.
#[derive(Debug, Clone)]
pub struct Stepper {
    rho: ComplexMatrix,
    dims: SubsystemDims,
    propagator: ComplexMatrix,
    propagator_adj: ComplexMatrix,
    sigma: ComplexMatrix,
    weight: f64,
    dt: f64,
    step_index: usize,
    initial_trace: Complex64,
    integrity: Integrity,
}

impl Stepper {
    pub fn new(
        h: &ComplexMatrix,
        rho0: &DensityMatrix,
        sigma: &DensityMatrix,
        params: &SimulationParams,
    ) -> Result<Self> {
        params.validate()?;
        let dims = rho0.dims().clone();
        let (_, env) = dims.as_pair()?;
        if sigma.dim() != env {
            return Err(Error::DimensionMismatch {
                expected: env,
                found: sigma.dim(),
            });
        }
        if h.dim() != rho0.dim() {
            return Err(Error::DimensionMismatch {
                expected: rho0.dim(),
                found: h.dim(),
            });
        }
        let propagator = unitary_exp(h, params.dt)?;
        let propagator_adj = propagator.adjoint();
        let unitarity = propagator
            .mul_unchecked(&propagator_adj)
            .max_abs_diff(&ComplexMatrix::identity(h.dim()));
        if unitarity > UNITARITY_TOL {
            return Err(Error::InvalidState(format!(
                "propagator unitarity error {unitarity:e} exceeds {UNITARITY_TOL:e}"
            )));
        }
        let rho = rho0.matrix().clone();
        Ok(Self {
            initial_trace: rho.trace(),
            integrity: Integrity {
                propagator_unitarity: unitarity,
                max_trace_drift: 0.0,
                max_hermiticity_deviation: rho.hermiticity_deviation(),
                min_eigenvalue: f64::INFINITY,
            },
            rho,
            dims,
            propagator,
            propagator_adj,
            sigma: sigma.matrix().clone(),
            weight: replacement_weight(params.p, params.tau, params.dt)?,
            dt: params.dt,
            step_index: 0,
        })
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn dims(&self) -> &SubsystemDims {
        &self.dims
    }

    pub fn propagator(&self) -> &ComplexMatrix {
        &self.propagator
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn step_index(&self) -> usize {
        self.step_index
    }

    pub fn time(&self) -> f64 {
        self.step_index as f64 * self.dt
    }

    pub fn integrity(&self) -> &Integrity {
        &self.integrity
    }

    /// Reduced state of the principal system.
    pub fn principal(&self) -> ComplexMatrix {
        partial_trace(&self.rho, &self.dims, 0).expect("dims checked at construction")
    }

    /// Advances one `Δt`.
    pub fn step(&mut self) -> Result<()> {
        let mixed = if self.weight == 1.0 {
            self.rho.clone()
        } else {
            let replaced = tensor(&self.principal(), &self.sigma);
            &self.rho.scale(self.weight) + &replaced.scale(1.0 - self.weight)
        };
        self.rho = self
            .propagator
            .mul_unchecked(&mixed)
            .mul_unchecked(&self.propagator_adj);
        self.step_index += 1;

        let drift = (self.rho.trace() - self.initial_trace).norm();
        self.integrity.max_trace_drift = self.integrity.max_trace_drift.max(drift);
        if drift > TRACE_DRIFT_LIMIT {
            return Err(Error::TraceDrift {
                step: self.step_index,
                drift,
                limit: TRACE_DRIFT_LIMIT,
            });
        }
        let herm = self.rho.hermiticity_deviation();
        self.integrity.max_hermiticity_deviation =
            self.integrity.max_hermiticity_deviation.max(herm);
        Ok(())
    }

    /// Folds the current joint spectrum into the integrity record.
    pub fn check_positivity(&mut self) -> Result<f64> {
        let min = self.rho.min_eigenvalue()?;
        self.integrity.min_eigenvalue = self.integrity.min_eigenvalue.min(min);
        Ok(min)
    }
}

/// Samples of one observable on the recording grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub observable: ObservableSpec,
    pub times: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl TimeSeries {
    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    pub fn real(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub series: Vec<TimeSeries>,
    pub integrity: Integrity,
}

/// Evolves `rho0` for `params.steps` steps, recording each observable on the
/// reduced principal state at the steps given by [`recorded_steps`].
pub fn run(
    h: &ComplexMatrix,
    rho0: &DensityMatrix,
    sigma: &DensityMatrix,
    params: &SimulationParams,
    observables: &[ObservableSpec],
) -> Result<RunOutput> {
    let mut stepper = Stepper::new(h, rho0, sigma, params)?;
    let (principal_dim, _) = stepper.dims().as_pair()?;
    for obs in observables {
        obs.check(principal_dim)?;
    }

    let samples = recorded_steps(params.steps, params.record_every).len();
    let mut times = Vec::with_capacity(samples);
    let mut values: Vec<Vec<Complex64>> = vec![Vec::with_capacity(samples); observables.len()];

    let mut record = |stepper: &mut Stepper| -> Result<()> {
        stepper.check_positivity()?;
        let reduced = stepper.principal();
        times.push(stepper.time());
        for (obs, column) in observables.iter().zip(values.iter_mut()) {
            column.push(obs.evaluate(&reduced)?);
        }
        Ok(())
    };

    record(&mut stepper)?;
    for k in 1..=params.steps {
        stepper.step()?;
        if k % params.record_every == 0 || k == params.steps {
            record(&mut stepper)?;
        }
    }

    let series = observables
        .iter()
        .cloned()
        .zip(values)
        .map(|(observable, values)| TimeSeries {
            observable,
            times: times.clone(),
            values,
        })
        .collect();
    Ok(RunOutput {
        series,
        integrity: *stepper.integrity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{log_rate, recurrence_oracle};
    use crate::models::{
        maximally_mixed, qubit_initial_state, qubit_qubit_hamiltonian, QubitQubitModel,
    };

    const C: f64 = 1000.0;
    const TAU: f64 = 1e-3;

    fn model() -> QubitQubitModel {
        QubitQubitModel::new(0.5, Complex64::new(0.5, 0.0), C).unwrap()
    }

    fn qubit_stepper(p: f64, dt: f64) -> Stepper {
        let m = model();
        let params = SimulationParams::for_horizon(p, TAU, dt, 0.0).unwrap();
        Stepper::new(
            &qubit_qubit_hamiltonian(&m),
            &qubit_initial_state(&m).unwrap(),
            &maximally_mixed(2),
            &params,
        )
        .unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(replacement_weight(0.0, TAU, 1e-6).unwrap(), 1.0);
        assert_eq!(replacement_weight(1.0, TAU, 1e-6).unwrap(), 0.0);
        // mpmath: exp(ln(0.25) * 1e-3)
        let w = replacement_weight(0.75, TAU, 1e-6).unwrap();
        assert!((w - 0.998614666101028924).abs() < 1e-15);
        assert!(replacement_weight(1.5, TAU, 1e-6).is_err());
        assert!(replacement_weight(-0.5, TAU, 1e-6).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(SimulationParams::for_horizon(0.5, 1e-3, 2e-3, 1.0).is_err());
        assert!(SimulationParams::for_horizon(0.5, 1e-3, 0.0, 1.0).is_err());
        let p = SimulationParams::for_horizon(0.5, 1e-3, 1e-6, 0.01).unwrap();
        assert_eq!(p.steps, 10_000);
        assert!(recorded_steps(p.steps, p.record_every).len() <= MAX_SAMPLES);
        assert!((p.total_time() - 0.01).abs() < 1e-15);
        assert!(p.with_record_every(0).validate().is_err());
    }

    #[test]
    fn record_every_caps_samples() {
        for steps in [0usize, 1, 4000, 4001, 12_345, 1_000_000] {
            let every = default_record_every(steps);
            let rec = recorded_steps(steps, every);
            assert!(rec.len() <= MAX_SAMPLES, "steps={steps}");
            assert_eq!(rec.last(), Some(&steps));
        }
        assert_eq!(recorded_steps(10, 3), vec![0, 3, 6, 9, 10]);
        assert_eq!(recorded_steps(9, 3), vec![0, 3, 6, 9]);
    }

    #[test]
    fn zero_hamiltonian_without_dissipation_is_identity() {
        let m = model();
        let rho0 = qubit_initial_state(&m).unwrap();
        let params = SimulationParams::for_horizon(0.0, TAU, 1e-6, 0.0).unwrap();
        let mut s = Stepper::new(
            &ComplexMatrix::zeros(4),
            &rho0,
            &maximally_mixed(2),
            &params,
        )
        .unwrap();
        for _ in 0..10 {
            s.step().unwrap();
        }
        assert!(s.rho().max_abs_diff(rho0.matrix()) < 1e-15);
    }

    #[test]
    fn full_replacement_step() {
        let m = model();
        let rho0 = qubit_initial_state(&m).unwrap();
        let mut s = qubit_stepper(1.0, 1e-6);
        let u = s.propagator().clone();
        s.step().unwrap();
        let reduced = partial_trace(rho0.matrix(), rho0.dims(), 0).unwrap();
        let want = u
            .matmul(&tensor(&reduced, maximally_mixed(2).matrix()))
            .unwrap()
            .matmul(&u.adjoint())
            .unwrap();
        assert!(s.rho().max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn first_step_matches_closed_form_entry() {
        let dt = 1e-6;
        for p in [0.0, 0.3, 1.0] {
            let mut s = qubit_stepper(p, dt);
            s.step().unwrap();
            let want = Complex64::from_polar(0.25, -C * dt / 2.0);
            assert!((s.rho()[(0, 2)] - want).norm() < 1e-16);
        }
    }

    #[test]
    fn stepper_matches_recurrence() {
        let dt = 1e-6;
        for p in [0.0, 0.25, 0.75, 1.0] {
            let oracle = recurrence_oracle(
                2000,
                Complex64::new(0.5, 0.0),
                C,
                log_rate(p, TAU).unwrap(),
                dt,
            );
            let mut s = qubit_stepper(p, dt);
            for pair in &oracle[1..] {
                s.step().unwrap();
                assert!((s.rho()[(0, 2)] - pair.f).norm() <= 1e-12);
                assert!((s.rho()[(1, 3)] - pair.g).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn run_with_zero_steps_records_initial_state() {
        let m = model();
        let params = SimulationParams::for_horizon(0.5, TAU, 1e-6, 0.0).unwrap();
        let out = run(
            &qubit_qubit_hamiltonian(&m),
            &qubit_initial_state(&m).unwrap(),
            &maximally_mixed(2),
            &params,
            &[ObservableSpec::Coherence01, ObservableSpec::Population(0)],
        )
        .unwrap();
        assert_eq!(out.series.len(), 2);
        assert_eq!(out.series[0].times, vec![0.0]);
        assert_eq!(out.series[0].values, vec![Complex64::new(0.5, 0.0)]);
        assert_eq!(out.series[1].values, vec![Complex64::new(0.5, 0.0)]);
    }

    #[test]
    fn run_without_dissipation_follows_cosine() {
        let m = model();
        let dt = 1e-6;
        let params = SimulationParams::for_horizon(0.0, TAU, dt, 0.02).unwrap();
        let out = run(
            &qubit_qubit_hamiltonian(&m),
            &qubit_initial_state(&m).unwrap(),
            &maximally_mixed(2),
            &params,
            &[ObservableSpec::Coherence01],
        )
        .unwrap();
        let series = &out.series[0];
        assert_eq!(
            series.times.len(),
            recorded_steps(params.steps, params.record_every).len()
        );
        for (t, v) in series.times.iter().zip(series.magnitudes()) {
            assert!((v - (0.5 * (C * t / 2.0).cos()).abs()).abs() < 1e-10);
        }
        assert!(out.integrity.propagator_unitarity <= UNITARITY_TOL);
        assert!(out.integrity.min_eigenvalue >= -1e-10);
    }

    #[test]
    fn run_rejects_mismatched_inputs() {
        let m = model();
        let rho0 = qubit_initial_state(&m).unwrap();
        let params = SimulationParams::for_horizon(0.5, TAU, 1e-6, 1e-5).unwrap();
        let h = qubit_qubit_hamiltonian(&m);
        assert!(matches!(
            run(&h, &rho0, &maximally_mixed(3), &params, &[]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            run(
                &ComplexMatrix::identity(2),
                &rho0,
                &maximally_mixed(2),
                &params,
                &[]
            ),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut bad = h.clone();
        bad[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(matches!(
            run(&bad, &rho0, &maximally_mixed(2), &params, &[]),
            Err(Error::NonHermitian { .. })
        ));
        assert!(run(
            &h,
            &rho0,
            &maximally_mixed(2),
            &params,
            &[ObservableSpec::Population(7)]
        )
        .is_err());
    }

    #[test]
    fn full_replacement_coherence_loss_is_second_order() {
        let dt = 1e-6;
        let steps = 2000;
        let mut s = qubit_stepper(1.0, dt);
        for _ in 0..steps {
            s.step().unwrap();
        }
        let coh = s.principal()[(0, 1)].norm();
        let bound = 0.5 * (1.0 - 10.0 * (C * dt).powi(2) * steps as f64);
        assert!(coh >= bound, "{coh} < {bound}");
    }
}
