//! Gaussian states: mean vector plus validated covariance matrix, canonical
//! builders, normal-mode data, power-state transforms and the two-state
//! overlap rule.

use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};
use num_traits::Float;

use crate::error::{Error, Result};
use crate::functions::{lambda_func, ln_g_func};
use crate::linalg::{max_abs, symmetrize, SpdFactor};
use crate::symplectic::{
    duplicated_diag, symplectic_residual, symplectic_spectrum, williamson, CovMatrix,
    SymplecticSpectrum, WilliamsonDecomposition, PHYSICAL_TOL,
};

use core::f64::consts::LN_2;

/// Loose residual gate on user-supplied symplectic transforms.
const SYMPLECTIC_CHECK_TOL: f64 = 1e-8;

/// A Gaussian state: quadrature displacement and covariance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    mean: DVector<f64>,
    cov: CovMatrix,
}

impl GaussianState {
    pub fn new(mean: DVector<f64>, cov: CovMatrix) -> Result<Self> {
        if mean.len() != cov.dim() {
            return Err(Error::DimensionMismatch {
                expected: cov.dim(),
                got: mean.len(),
            });
        }
        Ok(Self { mean, cov })
    }

    pub fn n(&self) -> usize {
        self.cov.n()
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &CovMatrix {
        &self.cov
    }

    /// The n-mode vacuum: zero mean, identity covariance.
    pub fn vacuum(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModes);
        }
        let cov = CovMatrix::new(DMatrix::identity(2 * n, 2 * n))?;
        Ok(Self {
            mean: DVector::zeros(2 * n),
            cov,
        })
    }

    /// Product of thermal modes with the given symplectic eigenvalues.
    pub fn thermal(nus: &[f64]) -> Result<Self> {
        if nus.is_empty() {
            return Err(Error::ZeroModes);
        }
        for &nu in nus {
            if nu < 1.0 - PHYSICAL_TOL {
                return Err(Error::BonaFideViolation { nu_min: nu });
            }
        }
        let cov = CovMatrix::new(duplicated_diag(nus))?;
        Ok(Self {
            mean: DVector::zeros(2 * nus.len()),
            cov,
        })
    }

    /// Coherent state with the given quadrature mean; identity covariance.
    pub fn coherent(mean: DVector<f64>) -> Result<Self> {
        if mean.is_empty() || !mean.len().is_multiple_of(2) {
            return Err(Error::BadShape {
                rows: mean.len(),
                cols: 1,
            });
        }
        let dim = mean.len();
        let cov = CovMatrix::new(DMatrix::identity(dim, dim))?;
        Ok(Self { mean, cov })
    }

    /// Single-mode squeezed vacuum: covariance diag(e^{2r}, e^{-2r}).
    pub fn squeezed(r: f64) -> Result<Self> {
        let cov = CovMatrix::new(DMatrix::from_diagonal(&DVector::from_column_slice(&[
            Float::exp(2.0 * r),
            Float::exp(-2.0 * r),
        ])))?;
        Ok(Self {
            mean: DVector::zeros(2),
            cov,
        })
    }

    /// Two-mode squeezed vacuum with squeezing parameter `r`.
    pub fn two_mode_squeezed(r: f64) -> Result<Self> {
        let c = Float::cosh(2.0 * r);
        let s = Float::sinh(2.0 * r);
        let mat = DMatrix::from_row_slice(
            4,
            4,
            &[
                c, 0.0, s, 0.0, //
                0.0, c, 0.0, -s, //
                s, 0.0, c, 0.0, //
                0.0, -s, 0.0, c,
            ],
        );
        Ok(Self {
            mean: DVector::zeros(4),
            cov: CovMatrix::new(mat)?,
        })
    }

    /// Shift the mean by `shift`, leaving the covariance untouched.
    pub fn displaced(&self, shift: &DVector<f64>) -> Result<Self> {
        if shift.len() != self.mean.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mean.len(),
                got: shift.len(),
            });
        }
        Ok(Self {
            mean: &self.mean + shift,
            cov: self.cov.clone(),
        })
    }

    /// Apply a symplectic matrix: covariance maps by congruence, the mean
    /// linearly. The transform is checked against the symplectic condition.
    pub fn symplectic_transform(&self, s: &DMatrix<f64>) -> Result<Self> {
        let dim = self.cov.dim();
        if s.nrows() != dim || s.ncols() != dim {
            return Err(Error::BadShape {
                rows: s.nrows(),
                cols: s.ncols(),
            });
        }
        let residual = symplectic_residual(s);
        if residual > SYMPLECTIC_CHECK_TOL {
            return Err(Error::NotSymplectic { residual });
        }
        let cov = CovMatrix::new(symmetrize(&(s * self.cov.matrix() * s.transpose())))?;
        Ok(Self {
            mean: s * &self.mean,
            cov,
        })
    }

    /// Symplectic spectrum of the covariance matrix.
    pub fn spectrum(&self) -> Result<SymplecticSpectrum> {
        symplectic_spectrum(&self.cov)
    }

    /// Whether every symplectic eigenvalue sits at 1 within tolerance.
    pub fn is_pure(&self) -> Result<bool> {
        Ok(self.spectrum()?.is_pure())
    }

    /// Mean and Williamson decomposition together.
    pub fn normal_modes(&self) -> Result<NormalModeForm> {
        Ok(NormalModeForm {
            mean: self.mean.clone(),
            decomposition: williamson(&self.cov)?,
        })
    }
}

/// Williamson data of a state, paired with its displacement.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalModeForm {
    pub mean: DVector<f64>,
    pub decomposition: WilliamsonDecomposition,
}

/// `log Tr rho^p` of a Gaussian state with the given exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTrace {
    pub p: f64,
    pub log_trace: f64,
}

/// Covariance matrix of the normalized power state `rho^p / Tr rho^p`:
/// the Williamson factors stay fixed while each eigenvalue moves through
/// the lambda map.
pub fn power_cm(v: &CovMatrix, p: f64) -> Result<CovMatrix> {
    if !(p > 0.0) {
        return Err(Error::NegativePower { p });
    }
    let w = williamson(v)?;
    let moved: Result<Vec<f64>> = w
        .spectrum()
        .values()
        .iter()
        .map(|&nu| lambda_func(p, nu))
        .collect();
    let d = duplicated_diag(&moved?);
    CovMatrix::new(symmetrize(&(w.s() * d * w.s().transpose())))
}

/// `log Tr rho^p` as a sum of per-mode factors over the symplectic spectrum.
pub fn log_trace_power(v: &CovMatrix, p: f64) -> Result<PowerTrace> {
    if !(p > 0.0) {
        return Err(Error::NegativePower { p });
    }
    let spectrum = symplectic_spectrum(v)?;
    let mut log_trace = 0.0;
    for &nu in spectrum.values() {
        log_trace += ln_g_func(p, nu)?;
    }
    Ok(PowerTrace { p, log_trace })
}

/// Overlap `Tr(rho rho')` of two Gaussian states:
/// `2^n exp(-1/2 d^T (V + V')^{-1} d) / sqrt(det(V + V'))`.
pub fn overlap(a: &GaussianState, b: &GaussianState) -> Result<f64> {
    if a.n() != b.n() {
        return Err(Error::ModeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let sum = a.cov().matrix() + b.cov().matrix();
    let factor = SpdFactor::new(&sum)?;
    let delta = a.mean() - b.mean();
    let quad = factor.quad_form(&delta)?;
    let log = a.n() as f64 * LN_2 - 0.5 * factor.log_det() - 0.5 * quad;
    Ok(Float::exp(log))
}

/// Tolerance for state equality in tests: means absolute, covariances
/// relative to the largest entry.
pub fn states_close(a: &GaussianState, b: &GaussianState, tol: f64) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mean_ok = (a.mean() - b.mean()).iter().all(|x| Float::abs(*x) <= tol);
    let scale = Float::max(1.0, max_abs(a.cov().matrix()));
    let cov_ok = max_abs(&(a.cov().matrix() - b.cov().matrix())) <= tol * scale;
    mean_ok && cov_ok
}
