// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use wipe_sim::error::EXIT_OK;
use wipe_sim::{run_scenario, Mode, Result, Scenario, ScenarioConfig, SimError};

#[derive(Debug, Parser)]
#[command(
    name = "wipe-sim",
    version,
    about = "Repeated-environment-replacement decoherence scenarios"
)]
struct Args {
    /// factors_curve, qubit_qubit, spin_boson or two_spin_negativity
    scenario: String,

    /// Flat `key = value` config file
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Override one key; may be repeated
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,

    /// Write CSV here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// qubit_qubit only
    #[arg(long, value_name = "analytic|numeric|both")]
    mode: Option<String>,
}

fn build_config(args: &Args) -> Result<ScenarioConfig> {
    let scenario: Scenario = args.scenario.parse()?;
    let mut cfg = ScenarioConfig::defaults(scenario);
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|source| SimError::Io {
            path: path.clone(),
            source,
        })?;
        cfg.apply_text(&text)?;
    }
    for assignment in &args.set {
        cfg.apply_assignment(assignment)?;
    }
    if let Some(mode) = &args.mode {
        if scenario != Scenario::QubitQubit {
            return Err(SimError::config("--mode applies to qubit_qubit only"));
        }
        cfg.mode = mode.parse::<Mode>()?;
    }
    if let Some(out) = &args.out {
        cfg.output_path = Some(out.clone());
    }
    cfg.validate()?;
    Ok(cfg)
}

fn execute(args: &Args) -> Result<()> {
    let cfg = build_config(args)?;
    let output = run_scenario(&cfg)?;
    let csv = output.table.to_csv();
    match &cfg.output_path {
        Some(path) => std::fs::write(path, csv).map_err(|source| SimError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(csv.as_bytes())
            .map_err(|source| SimError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::from(EXIT_OK as u8),
        Err(e) => {
            eprintln!("wipe-sim: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
