//! Brute-force truncated Fock-space oracle for single-mode states.
//!
//! Represents thermal states (diagonal geometric weights) and coherent
//! states (rank-1 projectors) as finite Hermitian matrices, then evaluates
//! exact quantities by dense eigendecomposition: trace norms, the Helstrom
//! error probability, and `Tr(rho_A^s rho_B^{1-s})`. Everything here exists
//! to validate the Gaussian closed forms at desk scale.
//!
//! Truncated states are not renormalized; the discarded tail mass is carried
//! so comparisons see the truncation honestly.

use alloc::vec::Vec;
use nalgebra::{Complex, DMatrix, DVector};
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::max_abs;
use crate::states::GaussianState;

/// Default geometric-tail cap for oracle truncations.
pub const DEFAULT_TAIL_CAP: f64 = 1e-12;
/// Largest truncation dimension the oracle will build.
pub const MAX_DIM: usize = 512;
/// Eigenvalues at or below this are treated as outside the support.
const SUPPORT_CUTOFF: f64 = 1e-15;

type CMatrix = DMatrix<Complex<f64>>;

/// A truncated Fock-basis Hermitian matrix with its discarded tail mass.
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrix {
    mat: CMatrix,
    tail_mass: f64,
}

impl FockMatrix {
    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    /// Probability weight lost to the truncation.
    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    /// Real part of the trace (the imaginary part vanishes for Hermitian
    /// matrices up to round-off).
    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|j| self.mat[(j, j)].re).sum()
    }

    /// Largest deviation from Hermiticity.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let d = self.mat[(i, j)] - self.mat[(j, i)].conj();
                worst = Float::max(worst, Float::sqrt(d.re * d.re + d.im * d.im));
            }
        }
        worst
    }

    /// Zero-extend to `dim` rows and columns.
    pub fn padded(&self, dim: usize) -> Self {
        if dim <= self.dim() {
            return self.clone();
        }
        let mut mat = CMatrix::zeros(dim, dim);
        mat.view_mut((0, 0), (self.dim(), self.dim()))
            .copy_from(&self.mat);
        Self {
            mat,
            tail_mass: self.tail_mass,
        }
    }

    /// `b - a` at the common dimension (the Helstrom difference).
    pub fn difference(b: &Self, a: &Self) -> Self {
        let (a, b) = common_dim(a, b);
        Self {
            mat: &b.mat - &a.mat,
            tail_mass: 0.0,
        }
    }
}

/// Truncation data of a thermal state: the symplectic eigenvalue, its
/// geometric ratio `eta = (nu-1)/(nu+1)`, and the chosen dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    pub nu: f64,
    pub eta: f64,
    pub dim: usize,
}

impl ThermalParams {
    /// Smallest dimension whose geometric tail `eta^D` sits below `tail_cap`.
    pub fn new(nu: f64, tail_cap: f64) -> Result<Self> {
        if !(tail_cap > 0.0 && tail_cap <= 1e-6) {
            return Err(Error::BadTailCap { cap: tail_cap });
        }
        let eta = thermal_eta(nu)?;
        let dim = if eta == 0.0 {
            1
        } else {
            let d = Float::floor(Float::ln(tail_cap) / Float::ln(eta)) as usize + 1;
            if d > MAX_DIM {
                return Err(Error::TailMass {
                    tail: Float::powi(eta, MAX_DIM as i32),
                    cap: tail_cap,
                });
            }
            d
        };
        Ok(Self { nu, eta, dim })
    }

    pub fn to_matrix(self) -> Result<FockMatrix> {
        thermal_fock_dim(self.nu, self.dim)
    }
}

/// Thermal state in the number basis: diagonal entries `(1-eta) eta^j` with
/// `eta = (nu-1)/(nu+1)`. The dimension is the smallest with geometric tail
/// `eta^D` below `tail_cap`.
pub fn thermal_fock(nu: f64, tail_cap: f64) -> Result<FockMatrix> {
    ThermalParams::new(nu, tail_cap)?.to_matrix()
}

/// Thermal state at an explicit dimension.
///
/// When two truncated thermal states feed a fractional-power quantity such
/// as [`q_s_fock`], build both at their common dimension: zero-padding the
/// smaller one leaves a joint tail that fractional powers amplify far above
/// the per-state tail mass.
pub fn thermal_fock_dim(nu: f64, dim: usize) -> Result<FockMatrix> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::DimensionMismatch {
            expected: MAX_DIM,
            got: dim,
        });
    }
    let eta = thermal_eta(nu)?;
    let mut mat = CMatrix::zeros(dim, dim);
    let mut weight = 1.0 - eta;
    for j in 0..dim {
        mat[(j, j)] = Complex::new(weight, 0.0);
        weight *= eta;
    }
    Ok(FockMatrix {
        mat,
        tail_mass: Float::powi(eta, dim as i32),
    })
}

fn thermal_eta(nu: f64) -> Result<f64> {
    if !(nu >= 1.0 - crate::symplectic::PHYSICAL_TOL) {
        return Err(Error::BelowOne { x: nu });
    }
    Ok(Float::max((nu - 1.0) / (nu + 1.0), 0.0))
}

/// Coherent state as a rank-1 projector onto `c_j = e^{-|a|^2/2} a^j / sqrt(j!)`
/// with the complex amplitude `a = (mean_q + i mean_p)/2`.
pub fn coherent_fock(mean: [f64; 2], dim: usize) -> Result<FockMatrix> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::DimensionMismatch {
            expected: MAX_DIM,
            got: dim,
        });
    }
    let amp = Complex::new(mean[0] / 2.0, mean[1] / 2.0);
    let abs2 = amp.norm_sqr();
    let mut c = DVector::<Complex<f64>>::zeros(dim);
    c[0] = Complex::new(Float::exp(-abs2 / 2.0), 0.0);
    for j in 1..dim {
        c[j] = c[j - 1] * amp / Complex::new(Float::sqrt(j as f64), 0.0);
    }
    let captured: f64 = c.iter().map(|z| z.norm_sqr()).sum();
    let tail = Float::max(1.0 - captured, 0.0);
    if tail >= 1e-12 {
        return Err(Error::TailMass { tail, cap: 1e-12 });
    }
    let mat = &c * c.adjoint();
    Ok(FockMatrix {
        mat,
        tail_mass: tail,
    })
}

/// Smallest dimension at which a coherent state of the given mean keeps its
/// Poisson tail under 1e-13.
pub fn coherent_dim(mean: [f64; 2]) -> Result<usize> {
    let abs2 = (mean[0] * mean[0] + mean[1] * mean[1]) / 4.0;
    let mut term = Float::exp(-abs2);
    let mut cum = 0.0;
    for j in 0..MAX_DIM {
        cum += term;
        if 1.0 - cum < 1e-13 {
            return Ok(j + 1);
        }
        term *= abs2 / (j + 1) as f64;
    }
    Err(Error::TailMass {
        tail: 1.0 - cum,
        cap: 1e-13,
    })
}

fn hermitian_eigen(m: &FockMatrix) -> (Vec<f64>, CMatrix) {
    let eig = m.mat.clone().symmetric_eigen();
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

fn is_exactly_diagonal(m: &CMatrix) -> bool {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if i != j && (m[(i, j)].re != 0.0 || m[(i, j)].im != 0.0) {
                return false;
            }
        }
    }
    true
}

/// Raise a positive semidefinite Hermitian matrix to a real power, with
/// `0^p = 0` (support convention; `p = 0` gives the support projector).
///
/// Exactly diagonal matrices are powered entrywise, which keeps deep
/// geometric tails exact; everything else goes through a dense Hermitian
/// eigendecomposition, where eigenvalues at the solver's noise floor are
/// treated as zero.
pub fn matrix_power(m: &FockMatrix, p: f64) -> Result<FockMatrix> {
    if !(p >= 0.0) {
        return Err(Error::NegativePower { p });
    }
    let powered = |w: f64, threshold: f64| -> Result<f64> {
        if w < -1e-10 {
            return Err(Error::NotPsd { eigenvalue: w });
        }
        Ok(if w <= threshold {
            0.0
        } else if p == 0.0 {
            1.0
        } else {
            Float::powf(w, p)
        })
    };

    if is_exactly_diagonal(&m.mat) {
        let dim = m.dim();
        let mut mat = CMatrix::zeros(dim, dim);
        for j in 0..dim {
            mat[(j, j)] = Complex::new(powered(m.mat[(j, j)].re, 0.0)?, 0.0);
        }
        return Ok(FockMatrix {
            mat,
            tail_mass: m.tail_mass,
        });
    }

    let (eigenvalues, vectors) = hermitian_eigen(m);
    let mut moved = DVector::<Complex<f64>>::zeros(eigenvalues.len());
    for (i, &w) in eigenvalues.iter().enumerate() {
        moved[i] = Complex::new(powered(w, SUPPORT_CUTOFF)?, 0.0);
    }
    let mat = &vectors * CMatrix::from_diagonal(&moved) * vectors.adjoint();
    // round-trip through the eigenbasis leaves tiny anti-Hermitian noise
    let mat = (&mat + mat.adjoint()) * Complex::new(0.5, 0.0);
    Ok(FockMatrix {
        mat,
        tail_mass: m.tail_mass,
    })
}

/// Sum of the absolute eigenvalues of a Hermitian matrix.
pub fn trace_norm(m: &FockMatrix) -> f64 {
    let (eigenvalues, _) = hermitian_eigen(m);
    eigenvalues.iter().map(|w| Float::abs(*w)).sum()
}

fn common_dim(a: &FockMatrix, b: &FockMatrix) -> (FockMatrix, FockMatrix) {
    let dim = a.dim().max(b.dim());
    (a.padded(dim), b.padded(dim))
}

/// Exact minimal error probability for discriminating two equiprobable
/// states: `1/2 (1 - 1/2 ||rho_B - rho_A||_1)`.
pub fn helstrom_error(a: &FockMatrix, b: &FockMatrix) -> Result<f64> {
    for m in [a, b] {
        let trace = m.trace();
        if Float::abs(trace - 1.0) > 1e-9 {
            return Err(Error::TraceNotUnit { trace });
        }
    }
    let gamma = FockMatrix::difference(b, a);
    let p = 0.5 * (1.0 - 0.5 * trace_norm(&gamma));
    Ok(p.clamp(0.0, 0.5))
}

/// `Tr(rho_A^s rho_B^{1-s})` evaluated directly in the truncated basis.
pub fn q_s_fock(a: &FockMatrix, b: &FockMatrix, s: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::SRange { s });
    }
    let (a, b) = common_dim(a, b);
    let pa = matrix_power(&a, s)?;
    let pb = matrix_power(&b, 1.0 - s)?;
    let product = &pa.mat * &pb.mat;
    Ok((0..product.nrows()).map(|j| product[(j, j)].re).sum())
}

// Entry-wise closeness of a 2x2 covariance to a target form.
fn cov_close(v: &DMatrix<f64>, target: &DMatrix<f64>) -> bool {
    max_abs(&(v - target)) <= 1e-9
}

/// Represent a Gaussian state in the oracle basis, when possible: coherent
/// states (identity covariance, any mean) and undisplaced thermal states.
pub fn fock_from_gaussian(state: &GaussianState, tail_cap: f64) -> Result<FockMatrix> {
    if state.n() != 1 {
        return Err(Error::OracleUnsupported {
            reason: "only single-mode states are representable",
        });
    }
    let v = state.cov().matrix();
    let mean_norm = Float::max(Float::abs(state.mean()[0]), Float::abs(state.mean()[1]));
    if cov_close(v, &DMatrix::identity(2, 2)) {
        let mean = [state.mean()[0], state.mean()[1]];
        return coherent_fock(mean, coherent_dim(mean)?);
    }
    let nu = 0.5 * (v[(0, 0)] + v[(1, 1)]);
    let thermal_target = DMatrix::from_diagonal(&DVector::from_column_slice(&[nu, nu]));
    if cov_close(v, &thermal_target) {
        if mean_norm > 1e-9 {
            return Err(Error::OracleUnsupported {
                reason: "displaced thermal states are not representable",
            });
        }
        return thermal_fock(nu, tail_cap);
    }
    Err(Error::OracleUnsupported {
        reason: "covariance is neither coherent-like nor a thermal diagonal",
    })
}

/// Helstrom error for a pair of Gaussian states through the oracle.
pub fn helstrom_from_states(a: &GaussianState, b: &GaussianState, tail_cap: f64) -> Result<f64> {
    let fa = fock_from_gaussian(a, tail_cap)?;
    let fb = fock_from_gaussian(b, tail_cap)?;
    helstrom_error(&fa, &fb)
}
