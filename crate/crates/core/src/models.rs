// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Hamiltonians, initial states and thermal replacement states for the
//! qubit–qubit, spin–boson and two-spin/two-mode systems.
//!
//! Frequencies are angular (rad/s) and enter `exp(-iHt)` without ħ. The
//! Gibbs exponent for a frequency-valued Hamiltonian is `-ħH / (k_B T)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, tensor, ComplexMatrix, SubsystemDims};
use crate::state::DensityMatrix;

/// Largest thermal population allowed above the Fock cutoff.
pub const MAX_TAIL_MASS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants;

impl PhysicalConstants {
    /// Boltzmann constant, J/K.
    pub const K_B: f64 = 1.380649e-23;
    /// Reduced Planck constant, J·s.
    pub const HBAR: f64 = 1.054571817e-34;

    /// `ħ / (k_B T)` in seconds; multiplies an angular frequency.
    pub fn inverse_thermal_frequency(temperature: f64) -> f64 {
        Self::HBAR / (Self::K_B * temperature)
    }
}

/// Spin-1/2 `I_z = diag(1/2, -1/2)`.
pub fn iz() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[0.5, -0.5])
}

/// Truncated bosonic annihilation operator on levels `0..n`.
pub fn annihilation(n: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "Fock truncation must be >= 2, got {n}"
        )));
    }
    let mut a = ComplexMatrix::zeros(n);
    for k in 0..n - 1 {
        a[(k, k + 1)] = Complex64::new(((k + 1) as f64).sqrt(), 0.0);
    }
    Ok(a)
}

fn number_operator(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&(0..n).map(|k| k as f64).collect::<Vec<_>>())
}

/// `a + a^†` on `n` levels.
fn quadrature(n: usize) -> Result<ComplexMatrix> {
    let a = annihilation(n)?;
    Ok(&a + &a.adjoint())
}

/// Thermal population above the cutoff of an untruncated oscillator:
/// `exp(-n ħν / k_B T)`.
pub fn thermal_tail_mass(nu: f64, temperature: f64, truncation: usize) -> f64 {
    let x = nu * PhysicalConstants::inverse_thermal_frequency(temperature);
    (-(truncation as f64) * x).exp()
}

fn check_mode(name: &str, nu: f64, temperature: f64, truncation: usize) -> Result<()> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::invalid(format!(
            "{name}: frequency must be > 0, got {nu}"
        )));
    }
    if truncation < 2 {
        return Err(Error::invalid(format!(
            "{name}: truncation must be >= 2, got {truncation}"
        )));
    }
    let tail = thermal_tail_mass(nu, temperature, truncation);
    if tail >= MAX_TAIL_MASS {
        return Err(Error::invalid(format!(
            "{name}: thermal tail mass {tail:e} beyond truncation {truncation} is not below {MAX_TAIL_MASS:e}"
        )));
    }
    Ok(())
}

fn check_temperature(temperature: f64) -> Result<()> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::invalid(format!(
            "temperature must be > 0, got {temperature}"
        )));
    }
    Ok(())
}

/// Gibbs state `exp(-ħ H / k_B T) / Z` of a frequency-valued Hamiltonian.
///
/// The spectrum is shifted by its minimum before exponentiating, so the
/// ground level always carries weight 1 before normalisation.
pub fn thermal_state(h_env: &ComplexMatrix, temperature: f64) -> Result<DensityMatrix> {
    check_temperature(temperature)?;
    let eig = hermitian_eigen(h_env)?;
    let beta = PhysicalConstants::inverse_thermal_frequency(temperature);
    let ground = eig.eigenvalues[0];
    let weights: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&e| (-beta * (e - ground)).exp())
        .collect();
    let z: f64 = weights.iter().sum();

    let v = eig.eigenvectors.as_nalgebra();
    let mut scaled = v.clone();
    for (k, w) in weights.iter().enumerate() {
        scaled.column_mut(k).scale_mut(w / z);
    }
    let rho = ComplexMatrix::from_nalgebra(scaled * v.adjoint())?;
    DensityMatrix::single(rho)
}

/// Single qubit coupled to a single maximally mixed environmental qubit
/// through `c I_z ⊗ I_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitQubitModel {
    /// Excited-state population of the principal qubit.
    pub a: f64,
    /// Initial coherence `⟨0|ρ|1⟩`.
    pub b: Complex64,
    /// Coupling, rad/s.
    pub c: f64,
}

impl QubitQubitModel {
    pub fn new(a: f64, b: Complex64, c: f64) -> Result<Self> {
        let m = Self { a, b, c };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.a) {
            return Err(Error::invalid(format!(
                "population a = {} outside [0, 1]",
                self.a
            )));
        }
        let bound = (self.a * (1.0 - self.a)).sqrt();
        if self.b.norm() > bound + 1e-15 {
            return Err(Error::invalid(format!(
                "|b| = {} exceeds sqrt(a(1-a)) = {bound}",
                self.b.norm()
            )));
        }
        if !self.c.is_finite() {
            return Err(Error::invalid("coupling must be finite"));
        }
        Ok(())
    }
}

/// `c I_z ⊗ I_z = diag(c/4, -c/4, -c/4, c/4)`.
pub fn qubit_qubit_hamiltonian(m: &QubitQubitModel) -> ComplexMatrix {
    tensor(&iz(), &iz()).scale(m.c)
}

/// `I_n / n`.
pub fn maximally_mixed(n: usize) -> DensityMatrix {
    DensityMatrix::single(ComplexMatrix::identity(n).scale(1.0 / n as f64))
        .expect("maximally mixed state is a valid density matrix")
}

/// `[[a, b], [b*, 1-a]] ⊗ I/2` with dims `[2, 2]`.
pub fn qubit_initial_state(m: &QubitQubitModel) -> Result<DensityMatrix> {
    m.validate()?;
    let principal = ComplexMatrix::from_rows(&[
        [Complex64::new(m.a, 0.0), m.b],
        [m.b.conj(), Complex64::new(1.0 - m.a, 0.0)],
    ])?;
    DensityMatrix::single(principal)?.tensor(&maximally_mixed(2))
}

/// Spin-1/2 resonantly coupled to one truncated bosonic mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinBosonModel {
    /// Spin precession and mode frequency, rad/s.
    pub nu: f64,
    /// Kelvin.
    pub temperature: f64,
    /// Coupling `c` in `c I_z (a^† + a)`, rad/s.
    pub coupling: f64,
    /// Number of Fock levels kept.
    pub truncation: usize,
}

impl SpinBosonModel {
    pub fn new(nu: f64, temperature: f64, coupling: f64, truncation: usize) -> Result<Self> {
        let m = Self {
            nu,
            temperature,
            coupling,
            truncation,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        check_temperature(self.temperature)?;
        check_mode("mode", self.nu, self.temperature, self.truncation)
    }

    pub fn dims(&self) -> SubsystemDims {
        SubsystemDims::bipartite(2, self.truncation).expect("positive dims")
    }

    /// `ν a^† a`.
    pub fn environment_hamiltonian(&self) -> ComplexMatrix {
        number_operator(self.truncation).scale(self.nu)
    }
}

/// `ν I_z ⊗ 1 + 1 ⊗ ν a^†a + c I_z ⊗ (a^† + a)` on `2N` levels.
pub fn spin_boson_hamiltonian(m: &SpinBosonModel) -> Result<ComplexMatrix> {
    let n = m.truncation;
    let spin = tensor(&iz().scale(m.nu), &ComplexMatrix::identity(n));
    let mode = tensor(&ComplexMatrix::identity(2), &m.environment_hamiltonian());
    let coupling = tensor(&iz(), &quadrature(n)?).scale(m.coupling);
    Ok(&(&spin + &mode) + &coupling)
}

/// Thermal state of the mode; also the replacement state.
pub fn spin_boson_environment(m: &SpinBosonModel) -> Result<DensityMatrix> {
    thermal_state(&m.environment_hamiltonian(), m.temperature)
}

/// `|+⟩⟨+| ⊗ σ_thermal`.
pub fn spin_boson_initial_state(m: &SpinBosonModel) -> Result<DensityMatrix> {
    let plus = DensityMatrix::single(ComplexMatrix::from_real_rows(&[[0.5, 0.5], [0.5, 0.5]])?)?;
    plus.tensor(&spin_boson_environment(m)?)
}

/// Electron and nuclear spin, each coupled to its own resonant mode.
///
/// Layout is `spin0 ⊗ spin1 ⊗ mode0 ⊗ mode1`, grouped as principal
/// (4 levels) ⊗ environment (`truncation0 * truncation1` levels).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinTwoModeModel {
    pub nu0: f64,
    pub nu1: f64,
    /// `A01` in `A01 I_z0 I_z1`.
    pub a01: f64,
    pub temperature: f64,
    pub c0: f64,
    pub c1: f64,
    pub truncation0: usize,
    pub truncation1: usize,
}

impl TwoSpinTwoModeModel {
    pub fn validate(&self) -> Result<()> {
        check_temperature(self.temperature)?;
        check_mode("mode 0", self.nu0, self.temperature, self.truncation0)?;
        check_mode("mode 1", self.nu1, self.temperature, self.truncation1)
    }

    pub fn environment_dim(&self) -> usize {
        self.truncation0 * self.truncation1
    }

    /// `[4, N0*N1]`: spin pair versus both modes.
    pub fn dims(&self) -> SubsystemDims {
        SubsystemDims::bipartite(4, self.environment_dim()).expect("positive dims")
    }

    /// `ν0 a0^†a0 + ν1 a1^†a1`.
    pub fn environment_hamiltonian(&self) -> ComplexMatrix {
        let n0 = number_operator(self.truncation0).scale(self.nu0);
        let n1 = number_operator(self.truncation1).scale(self.nu1);
        &tensor(&n0, &ComplexMatrix::identity(self.truncation1))
            + &tensor(&ComplexMatrix::identity(self.truncation0), &n1)
    }

    /// `ν0 I_z0 + ν1 I_z1 + A01 I_z0 I_z1`.
    pub fn principal_hamiltonian(&self) -> ComplexMatrix {
        let id2 = ComplexMatrix::identity(2);
        let iz0 = tensor(&iz(), &id2);
        let iz1 = tensor(&id2, &iz());
        let zz = iz0.mul_unchecked(&iz1);
        &(&iz0.scale(self.nu0) + &iz1.scale(self.nu1)) + &zz.scale(self.a01)
    }
}

pub fn two_spin_hamiltonian(m: &TwoSpinTwoModeModel) -> Result<ComplexMatrix> {
    let id2 = ComplexMatrix::identity(2);
    let id_env = ComplexMatrix::identity(m.environment_dim());
    let iz0 = tensor(&iz(), &id2);
    let iz1 = tensor(&id2, &iz());
    let x0 = tensor(
        &quadrature(m.truncation0)?,
        &ComplexMatrix::identity(m.truncation1),
    );
    let x1 = tensor(
        &ComplexMatrix::identity(m.truncation0),
        &quadrature(m.truncation1)?,
    );

    let principal = tensor(&m.principal_hamiltonian(), &id_env);
    let environment = tensor(&ComplexMatrix::identity(4), &m.environment_hamiltonian());
    let coupling = &tensor(&iz0, &x0).scale(m.c0) + &tensor(&iz1, &x1).scale(m.c1);
    Ok(&(&principal + &environment) + &coupling)
}

pub fn two_spin_environment(m: &TwoSpinTwoModeModel) -> Result<DensityMatrix> {
    thermal_state(&m.environment_hamiltonian(), m.temperature)
}

/// `(|00⟩ + |11⟩)(⟨00| + ⟨11|) / 2`.
pub fn bell_state() -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(4);
    for &(i, j) in &[(0, 0), (0, 3), (3, 0), (3, 3)] {
        m[(i, j)] = Complex64::new(0.5, 0.0);
    }
    DensityMatrix::new(m, SubsystemDims::bipartite(2, 2).expect("positive dims"))
        .expect("Bell state is a valid density matrix")
}

/// Bell pair on the spins ⊗ thermal state of both modes, dims `[4, N0*N1]`.
pub fn two_spin_initial_state(m: &TwoSpinTwoModeModel) -> Result<DensityMatrix> {
    let spins = DensityMatrix::single(bell_state().into_matrix())?;
    spins.tensor(&two_spin_environment(m)?)
}
