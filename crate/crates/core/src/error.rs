// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max |A - A^H| = {deviation:e})")]
    NonHermitian { deviation: f64 },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("subsystem dims {dims:?} (product {product}) do not match matrix dim {dim}")]
    InconsistentDims {
        dims: Vec<usize>,
        product: usize,
        dim: usize,
    },

    #[error("operation needs a bipartite split, got {0} factors")]
    NotBipartite(usize),

    #[error("subsystem index {index} out of range for {factors} factors")]
    SubsystemIndex { index: usize, factors: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a density matrix: {0}")]
    InvalidState(String),

    #[error("degenerate decoherence factors (r+ = r-); use the confluent form")]
    DegenerateBranch,

    #[error("trace drift {drift:e} at step {step} exceeds {limit:e}")]
    TraceDrift { step: usize, drift: f64, limit: f64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
