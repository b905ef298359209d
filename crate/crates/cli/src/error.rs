// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, SimError>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("config error: {0}")]
    Config(String),

    #[error("config error at line {line}: {message}")]
    ConfigLine { line: usize, message: String },

    #[error("trajectory p = {p} failed: {source}")]
    Trajectory {
        p: f64,
        #[source]
        source: wipe_core::Error,
    },

    #[error(transparent)]
    Core(#[from] wipe_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn is_numerical(e: &wipe_core::Error) -> bool {
    matches!(
        e,
        wipe_core::Error::TraceDrift { .. }
            | wipe_core::Error::InvalidState(_)
            | wipe_core::Error::NonFinite { .. }
    )
}

impl SimError {
    pub fn config(msg: impl Into<String>) -> Self {
        SimError::Config(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            SimError::Config(_) | SimError::ConfigLine { .. } => EXIT_CONFIG,
            SimError::Trajectory { source, .. } | SimError::Core(source) => {
                if is_numerical(source) {
                    EXIT_NUMERICAL
                } else {
                    EXIT_CONFIG
                }
            }
            SimError::Io { .. } => EXIT_IO,
        }
    }
}
