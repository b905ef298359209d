// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Named scenarios, parameter sweeps over `p` and CSV output for the
//! `wipe-sim` command.

// `!(x > 0.0)`-style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod scenarios;
pub mod table;

pub use config::{Mode, Scenario, ScenarioConfig};
pub use error::{Result, SimError};
pub use scenarios::{
    run_factors_curve, run_qubit_qubit, run_scenario, run_spin_boson, run_two_spin_negativity,
    sweep, ScenarioOutput, TrajectoryReport,
};
pub use table::ResultTable;
