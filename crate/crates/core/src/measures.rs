// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Observables recorded along a trajectory.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, partial_transpose, trace_norm, ComplexMatrix, SubsystemDims};

/// Raw negativities above `-NEGATIVITY_NOISE` are eigenvalue noise.
pub const NEGATIVITY_NOISE: f64 = 1e-10;

/// `|⟨0|ρ|1⟩|` of a single-qubit state.
pub fn coherence(rho1: &ComplexMatrix) -> Result<f64> {
    if rho1.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rho1.dim(),
        });
    }
    Ok(rho1[(0, 1)].norm())
}

/// `(‖ρ^{T_side}‖₁ - 1) / 2` without clamping.
pub fn negativity_raw(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    transpose_side: usize,
) -> Result<f64> {
    let pt = partial_transpose(rho, dims, transpose_side)?;
    Ok((trace_norm(&pt)? - 1.0) / 2.0)
}

/// Negativity across a bipartite cut, clamped at zero.
///
/// Raw values below `-NEGATIVITY_NOISE` indicate an invalid input state and
/// are reported as an error instead of being clamped.
pub fn negativity(rho: &ComplexMatrix, dims: &SubsystemDims, transpose_side: usize) -> Result<f64> {
    let raw = negativity_raw(rho, dims, transpose_side)?;
    if raw < -NEGATIVITY_NOISE {
        return Err(Error::InvalidState(format!(
            "raw negativity {raw:e} is negative"
        )));
    }
    Ok(raw.max(0.0))
}

/// Negativity between the two spins of a `[4, N0*N1]` spin-pair ⊗ modes
/// state, after tracing out the modes.
pub fn negativity_spin_pair(rho_joint: &ComplexMatrix, dims: &SubsystemDims) -> Result<f64> {
    let (principal, _) = dims.as_pair()?;
    if principal != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: principal,
        });
    }
    let spins = partial_trace(rho_joint, dims, 0)?;
    negativity(&spins, &SubsystemDims::bipartite(2, 2)?, 1)
}

/// A scalar read off the reduced principal state.
#[derive(Debug, Clone, PartialEq)]
pub enum ObservableSpec {
    /// `|⟨0|ρ₁|1⟩|`.
    Coherence01,
    /// Negativity of the principal state across `dims`.
    Negativity {
        dims: SubsystemDims,
        transpose_side: usize,
    },
    /// `⟨k|ρ₁|k⟩`.
    Population(usize),
    /// `⟨i|ρ₁|j⟩`, complex.
    MatrixElement(usize, usize),
}

impl ObservableSpec {
    /// Negativity between two qubits forming the principal system.
    pub fn spin_pair_negativity() -> Self {
        ObservableSpec::Negativity {
            dims: SubsystemDims::bipartite(2, 2).expect("positive dims"),
            transpose_side: 1,
        }
    }

    pub fn check(&self, principal_dim: usize) -> Result<()> {
        let bound = |i: usize| {
            if i >= principal_dim {
                Err(Error::invalid(format!(
                    "index {i} out of range for principal dimension {principal_dim}"
                )))
            } else {
                Ok(())
            }
        };
        match self {
            ObservableSpec::Coherence01 if principal_dim != 2 => Err(Error::DimensionMismatch {
                expected: 2,
                found: principal_dim,
            }),
            ObservableSpec::Coherence01 => Ok(()),
            ObservableSpec::Negativity {
                dims,
                transpose_side,
            } => {
                dims.check(principal_dim)?;
                dims.as_pair()?;
                if *transpose_side > 1 {
                    return Err(Error::SubsystemIndex {
                        index: *transpose_side,
                        factors: 2,
                    });
                }
                Ok(())
            }
            ObservableSpec::Population(k) => bound(*k),
            ObservableSpec::MatrixElement(i, j) => bound(*i).and(bound(*j)),
        }
    }

    pub fn evaluate(&self, reduced: &ComplexMatrix) -> Result<Complex64> {
        let real = |x: f64| Complex64::new(x, 0.0);
        match self {
            ObservableSpec::Coherence01 => coherence(reduced).map(real),
            ObservableSpec::Negativity {
                dims,
                transpose_side,
            } => negativity(reduced, dims, *transpose_side).map(real),
            ObservableSpec::Population(k) => Ok(real(reduced[(*k, *k)].re)),
            ObservableSpec::MatrixElement(i, j) => Ok(reduced[(*i, *j)]),
        }
    }
}

impl fmt::Display for ObservableSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObservableSpec::Coherence01 => write!(f, "coherence_01"),
            ObservableSpec::Negativity { .. } => write!(f, "negativity"),
            ObservableSpec::Population(k) => write!(f, "population({k})"),
            ObservableSpec::MatrixElement(i, j) => write!(f, "element({i},{j})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tensor;
    use crate::models::bell_state;

    fn pair() -> SubsystemDims {
        SubsystemDims::bipartite(2, 2).unwrap()
    }

    #[test]
    fn coherence_examples() {
        let plus = ComplexMatrix::from_real_rows(&[[0.5, 0.5], [0.5, 0.5]]).unwrap();
        assert_eq!(coherence(&plus).unwrap(), 0.5);
        assert_eq!(
            coherence(&ComplexMatrix::from_real_diagonal(&[0.3, 0.7])).unwrap(),
            0.0
        );
        let b = Complex64::new(0.1, -0.2);
        let rho = ComplexMatrix::from_rows(&[
            [Complex64::new(0.4, 0.0), b],
            [b.conj(), Complex64::new(0.6, 0.0)],
        ])
        .unwrap();
        assert_eq!(coherence(&rho).unwrap(), b.norm());
        assert!(coherence(&ComplexMatrix::identity(4)).is_err());
    }

    #[test]
    fn negativity_examples() {
        let bell = bell_state();
        assert!((negativity(bell.matrix(), &pair(), 1).unwrap() - 0.5).abs() < 1e-10);

        let ra = ComplexMatrix::from_real_rows(&[[0.6, 0.2], [0.2, 0.4]]).unwrap();
        let rb = ComplexMatrix::from_rows(&[
            [Complex64::new(0.3, 0.0), Complex64::new(0.1, -0.3)],
            [Complex64::new(0.1, 0.3), Complex64::new(0.7, 0.0)],
        ])
        .unwrap();
        assert!(negativity(&tensor(&ra, &rb), &pair(), 1).unwrap().abs() < 1e-10);

        // Werner: w Bell + (1-w) I/4; PT eigenvalue (1-w)/4 - w/2 vanishes at w = 1/3.
        let w = 1.0 / 3.0;
        let werner = &bell.matrix().scale(w) + &ComplexMatrix::identity(4).scale((1.0 - w) / 4.0);
        assert!(negativity(&werner, &pair(), 1).unwrap().abs() < 1e-10);
        let w = 0.8;
        let werner = &bell.matrix().scale(w) + &ComplexMatrix::identity(4).scale((1.0 - w) / 4.0);
        let want = -((1.0 - w) / 4.0 - w / 2.0);
        assert!((negativity(&werner, &pair(), 1).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn negativity_rejects_bad_dims() {
        let bell = bell_state();
        let wrong = SubsystemDims::bipartite(2, 3).unwrap();
        assert!(negativity(bell.matrix(), &wrong, 1).is_err());
    }

    #[test]
    fn spin_pair_negativity_examples() {
        let env = ComplexMatrix::from_real_diagonal(&[1.0, 0.0, 0.0, 0.0]);
        let dims = SubsystemDims::bipartite(4, 4).unwrap();
        let joint = tensor(bell_state().matrix(), &env);
        assert!((negativity_spin_pair(&joint, &dims).unwrap() - 0.5).abs() < 1e-12);

        let dephased = ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5]);
        let joint = tensor(&dephased, &env);
        assert!(negativity_spin_pair(&joint, &dims).unwrap().abs() < 1e-12);

        let bad = SubsystemDims::bipartite(2, 8).unwrap();
        assert!(negativity_spin_pair(&joint, &bad).is_err());
    }

    #[test]
    fn observable_checks() {
        assert!(ObservableSpec::Coherence01.check(2).is_ok());
        assert!(ObservableSpec::Coherence01.check(4).is_err());
        assert!(ObservableSpec::Population(3).check(4).is_ok());
        assert!(ObservableSpec::Population(4).check(4).is_err());
        assert!(ObservableSpec::MatrixElement(0, 5).check(4).is_err());
        assert!(ObservableSpec::spin_pair_negativity().check(4).is_ok());
        assert!(ObservableSpec::spin_pair_negativity().check(2).is_err());
    }
}
