// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, ComplexMatrix, SubsystemDims};

/// Trace and Hermiticity tolerance applied when a state is validated.
pub const STATE_TOL: f64 = 1e-10;
/// Most negative eigenvalue still accepted as numerical noise.
pub const PSD_TOL: f64 = 1e-10;

/// A validated density matrix: unit trace, Hermitian, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: SubsystemDims,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, dims: SubsystemDims) -> Result<Self> {
        dims.check(matrix.dim())?;
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace is {trace}, expected 1")));
        }
        let herm = matrix.hermiticity_deviation();
        if herm > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "Hermiticity deviation {herm:e} exceeds {STATE_TOL:e}"
            )));
        }
        let min_eig = matrix.min_eigenvalue()?;
        if min_eig < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "minimum eigenvalue {min_eig:e} is negative"
            )));
        }
        Ok(Self { matrix, dims })
    }

    /// Single-factor state.
    pub fn single(matrix: ComplexMatrix) -> Result<Self> {
        let dims = SubsystemDims::new(vec![matrix.dim()])?;
        Self::new(matrix, dims)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> &SubsystemDims {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Product state `self ⊗ other`, recorded as a two-factor split.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<Self> {
        let dims = SubsystemDims::bipartite(self.dim(), other.dim())?;
        Ok(Self {
            matrix: self.matrix.tensor(&other.matrix),
            dims,
        })
    }

    /// Reduced state on factor `keep` of a bipartite state.
    pub fn reduce(&self, keep: usize) -> Result<Self> {
        let reduced = partial_trace(&self.matrix, &self.dims, keep)?;
        Self::single(reduced)
    }

    pub fn with_dims(self, dims: SubsystemDims) -> Result<Self> {
        dims.check(self.dim())?;
        Ok(Self { dims, ..self })
    }
}
