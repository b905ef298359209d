// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra on square matrices.
//!
//! Tensor layout is big-endian: for a bipartite space with dims `[d0, d1]`
//! the joint index of `(i0, i1)` is `i0 * d1 + i1`, so the leftmost factor
//! varies slowest. Factor 0 is the principal system and factor 1 the
//! environment throughout the crate.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Max-entry tolerance on `|A - A^H|` for anything treated as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Dense square complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("matrix dimension must be at least 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Self::from_nalgebra(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(dim, &entries)
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    /// Wraps an nalgebra matrix, rejecting non-square or non-finite input.
    pub fn from_nalgebra(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        if m.nrows() == 0 {
            return Err(Error::invalid("matrix dimension must be at least 1"));
        }
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                let z = m[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self(m))
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self(DMatrix::identity(dim, dim))
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        assert!(!diag.is_empty(), "matrix dimension must be at least 1");
        let mut m = DMatrix::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        Self(m)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let diag: Vec<Complex64> = diag.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_diagonal(&diag)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_nalgebra(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_nalgebra(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self.0[(i, i)]).collect()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(&self.0 * Complex64::new(s, 0.0))
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        Self(&self.0 * s)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        matmul(self, other)
    }

    pub fn adjoint(&self) -> Self {
        adjoint(self)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        tensor(self, other)
    }

    /// Largest entry of `|A - A^H|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.0[(i, j)] - self.0[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Smallest eigenvalue of a Hermitian matrix.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(hermitian_eigen(self)?.eigenvalues[0])
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, idx: (usize, usize)) -> &mut Complex64 {
        &mut self.0[idx]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim(), self.dim())?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|j| {
                    let z = self.0[(i, j)];
                    format!("{:+.6e}{:+.6e}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dimensions of the tensor factors of a composite space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsystemDims(Vec<usize>);

impl SubsystemDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::invalid(format!(
                "subsystem dims must be a nonempty list of positive integers, got {dims:?}"
            )));
        }
        Ok(Self(dims))
    }

    pub fn bipartite(principal: usize, environment: usize) -> Result<Self> {
        Self::new(vec![principal, environment])
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn check(&self, dim: usize) -> Result<()> {
        let product = self.total();
        if product != dim {
            return Err(Error::InconsistentDims {
                dims: self.0.clone(),
                product,
                dim,
            });
        }
        Ok(())
    }

    /// `(d0, d1)` for a two-factor split.
    pub fn as_pair(&self) -> Result<(usize, usize)> {
        match self.0.as_slice() {
            &[a, b] => Ok((a, b)),
            other => Err(Error::NotBipartite(other.len())),
        }
    }
}

/// Eigen-decomposition `A = V diag(λ) V^H` with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    /// Unitary; column `k` pairs with `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors.0;
        let mut scaled = v.clone();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            scaled.column_mut(k).scale_mut(lambda);
        }
        ComplexMatrix(scaled * v.adjoint())
    }
}

pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.mul_unchecked(b))
}

pub fn adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.adjoint())
}

/// Kronecker product `a ⊗ b`, `a` being the slow (left) factor.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.kronecker(&b.0))
}

fn check_hermitian(a: &ComplexMatrix) -> Result<()> {
    let deviation = a.hermiticity_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NonHermitian { deviation });
    }
    Ok(())
}

pub fn hermitian_eigen(a: &ComplexMatrix) -> Result<HermitianEigen> {
    check_hermitian(a)?;
    let eig = SymmetricEigen::new(a.0.clone());
    let n = a.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));

    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors: ComplexMatrix(vectors),
    })
}

/// `exp(-i H t)` for Hermitian `H` given in angular-frequency units.
pub fn unitary_exp(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(h)?;
    let v = &eig.eigenvectors.0;
    let mut scaled = v.clone();
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        let phase = Complex64::from_polar(1.0, -lambda * t);
        scaled.column_mut(k).iter_mut().for_each(|z| *z *= phase);
    }
    Ok(ComplexMatrix(scaled * v.adjoint()))
}

/// Reduced matrix on factor `keep` of a bipartite operator.
pub fn partial_trace(
    a: &ComplexMatrix,
    dims: &SubsystemDims,
    keep: usize,
) -> Result<ComplexMatrix> {
    dims.check(a.dim())?;
    let (d0, d1) = dims.as_pair()?;
    let m = &a.0;
    let out = match keep {
        0 => DMatrix::from_fn(d0, d0, |i, j| {
            (0..d1).map(|k| m[(i * d1 + k, j * d1 + k)]).sum()
        }),
        1 => DMatrix::from_fn(d1, d1, |i, j| {
            (0..d0).map(|k| m[(k * d1 + i, k * d1 + j)]).sum()
        }),
        index => return Err(Error::SubsystemIndex { index, factors: 2 }),
    };
    Ok(ComplexMatrix(out))
}

/// Transposes the indices of factor `which` only.
pub fn partial_transpose(
    a: &ComplexMatrix,
    dims: &SubsystemDims,
    which: usize,
) -> Result<ComplexMatrix> {
    dims.check(a.dim())?;
    let (d0, d1) = dims.as_pair()?;
    if which > 1 {
        return Err(Error::SubsystemIndex {
            index: which,
            factors: 2,
        });
    }
    let m = &a.0;
    let n = a.dim();
    let out = DMatrix::from_fn(n, n, |r, c| {
        let (i0, i1) = (r / d1, r % d1);
        let (j0, j1) = (c / d1, c % d1);
        if which == 1 {
            m[(i0 * d1 + j1, j0 * d1 + i1)]
        } else {
            m[(j0 * d1 + i1, i0 * d1 + j1)]
        }
    });
    debug_assert_eq!(n, d0 * d1);
    Ok(ComplexMatrix(out))
}

/// Sum of absolute eigenvalues; Hermitian input only.
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigen(a)?
        .eigenvalues
        .iter()
        .map(|l| l.abs())
        .sum())
}
