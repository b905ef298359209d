// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixtures for the kernel benchmarks.

use wipe_core::models::{
    spin_boson_environment, spin_boson_hamiltonian, spin_boson_initial_state, two_spin_environment,
    two_spin_hamiltonian, two_spin_initial_state,
};
use wipe_core::{ComplexMatrix, SimulationParams, SpinBosonModel, Stepper, TwoSpinTwoModeModel};

fn params(p: f64) -> SimulationParams {
    SimulationParams {
        p,
        tau: 1e-8,
        dt: 5e-10,
        steps: 0,
        record_every: 1,
    }
}

/// Spin–boson stepper with a joint dimension of `2 * truncation`.
pub fn spin_boson_stepper(truncation: usize, p: f64) -> Stepper {
    let m = SpinBosonModel::new(3.4e10, 1e-3, 1e7, truncation).expect("valid model");
    Stepper::new(
        &spin_boson_hamiltonian(&m).expect("hamiltonian"),
        &spin_boson_initial_state(&m).expect("initial state"),
        &spin_boson_environment(&m).expect("environment"),
        &params(p),
    )
    .expect("stepper")
}

fn two_spin_model(n0: usize, n1: usize) -> TwoSpinTwoModeModel {
    TwoSpinTwoModeModel {
        nu0: 3.4e10,
        nu1: 4.87e7,
        a01: 1e7,
        temperature: 1e-6,
        c0: 1e7,
        c1: 1e7,
        truncation0: n0,
        truncation1: n1,
    }
}

/// Two spins, two modes; joint dimension `4 * n0 * n1`.
pub fn two_spin_stepper(n0: usize, n1: usize, p: f64) -> Stepper {
    let m = two_spin_model(n0, n1);
    Stepper::new(
        &two_spin_hamiltonian(&m).expect("hamiltonian"),
        &two_spin_initial_state(&m).expect("initial state"),
        &two_spin_environment(&m).expect("environment"),
        &params(p),
    )
    .expect("stepper")
}

/// Hamiltonian of the two-spin model, as a Hermitian test matrix.
pub fn two_spin_hamiltonian_matrix(n0: usize, n1: usize) -> ComplexMatrix {
    two_spin_hamiltonian(&two_spin_model(n0, n1)).expect("hamiltonian")
}
