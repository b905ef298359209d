// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Coherence of a principal quantum system whose directly coupled
//! environment is replaced by a thermal state with probability `p` per
//! interval `τ`.
//!
//! - [`linalg`]: dense complex matrices, eigen-decomposition, partial trace
//!   and transpose.
//! - [`models`]: Hamiltonians and states for the qubit–qubit, spin–boson
//!   and two-spin/two-mode systems.
//! - [`stepper`]: the replace-then-evolve map iterated over a time grid.
//! - [`analytic`]: closed-form qubit–qubit solution and its exact
//!   finite-step recurrence.
//! - [`measures`]: coherence and negativity observables.

// `!(x > 0.0)`-style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Oracle values in tests are frozen at full printed precision.
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod analytic;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod models;
pub mod state;
pub mod stepper;

pub use analytic::{
    coefficients, decoherence_factors, eta, f_g_closed, log_rate, recurrence_oracle, threshold,
    Branch, CoherenceCoefficients, DecoherenceFactors, RecurrencePair,
};
pub use error::{Error, Result};
pub use linalg::{
    adjoint, hermitian_eigen, matmul, partial_trace, partial_transpose, tensor, trace_norm,
    unitary_exp, ComplexMatrix, HermitianEigen, SubsystemDims,
};
pub use measures::{coherence, negativity, negativity_raw, negativity_spin_pair, ObservableSpec};
pub use models::{PhysicalConstants, QubitQubitModel, SpinBosonModel, TwoSpinTwoModeModel};
pub use num_complex::Complex64;
pub use state::DensityMatrix;
pub use stepper::{
    recorded_steps, replacement_weight, run, Integrity, RunOutput, SimulationParams, Stepper,
    TimeSeries,
};
