//! The symplectic form, covariance-matrix validation, symplectic spectra and
//! the Williamson normal form, plus a seeded random-symplectic generator for
//! invariance test suites.
//!
//! Conventions: `n` bosonic modes live in a 2n-dimensional phase space with
//! quadrature ordering (q1, p1, ..., qn, pn); the vacuum covariance is the
//! identity, so physical covariance matrices have every symplectic
//! eigenvalue at or above 1.

use alloc::vec::Vec;
use nalgebra::{Complex, DMatrix};
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{antisymmetrize, expm, max_abs, sym_sqrt, SpdFactor};

/// Relative symmetry tolerance for covariance validation.
pub const SYM_TOL: f64 = 1e-10;
/// Slack below 1 admitted for symplectic eigenvalues (pure states under round-off).
pub const PHYSICAL_TOL: f64 = 1e-9;
/// Relative tolerance when pairing eigenvalue moduli.
pub const PAIR_TOL: f64 = 1e-8;
/// Residual gate on the Williamson reconstruction.
pub const RECON_TOL: f64 = 1e-10;

/// The canonical symplectic form: a direct sum of n blocks [[0, 1], [-1, 0]].
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm {
    n: usize,
    matrix: DMatrix<f64>,
}

impl SymplecticForm {
    /// Build the canonical form for `n` modes.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModes);
        }
        Ok(Self {
            n,
            matrix: omega(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }
}

pub(crate) fn omega(n: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        m[(2 * k, 2 * k + 1)] = 1.0;
        m[(2 * k + 1, 2 * k)] = -1.0;
    }
    m
}

/// Residual of the symplectic condition `S Omega S^T = Omega`.
pub fn symplectic_residual(s: &DMatrix<f64>) -> f64 {
    let n = s.nrows() / 2;
    let om = omega(n);
    max_abs(&(s * &om * s.transpose() - &om))
}

/// A validated covariance matrix: symmetric, positive definite and with
/// every symplectic eigenvalue at or above 1 (within [`PHYSICAL_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct CovMatrix {
    n: usize,
    mat: DMatrix<f64>,
}

/// One violated covariance invariant, with the offending value.
#[derive(Debug, Clone, PartialEq)]
pub enum CovDiagnostic {
    Asymmetric { row: usize, col: usize, delta: f64 },
    NotPositiveDefinite { min_eigenvalue: f64 },
    BelowVacuumNoise { nu_min: f64 },
}

impl CovMatrix {
    /// Validate and take ownership of a 2n x 2n covariance matrix.
    ///
    /// Checks symmetry, positive definiteness, and the physicality floor on
    /// the symplectic spectrum. The stored matrix is exactly symmetrized.
    pub fn new(mat: DMatrix<f64>) -> Result<Self> {
        let dim = mat.nrows();
        if mat.ncols() != dim || dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::BadShape {
                rows: dim,
                cols: mat.ncols(),
            });
        }
        if let Some((row, col, delta)) = worst_asymmetry(&mat) {
            let scale = Float::max(1.0, Float::abs(mat[(row, col)]));
            if delta > SYM_TOL * scale {
                return Err(Error::NotSymmetric { row, col, delta });
            }
        }
        let mat = crate::linalg::symmetrize(&mat);
        SpdFactor::new(&mat)?;
        let nus = spectrum_of(&mat)?;
        let nu_min = nus.last().copied().unwrap_or(1.0);
        if nu_min < 1.0 - PHYSICAL_TOL {
            return Err(Error::BonaFideViolation { nu_min });
        }
        Ok(Self { n: dim / 2, mat })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Phase-space dimension, 2n.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }
}

fn worst_asymmetry(mat: &DMatrix<f64>) -> Option<(usize, usize, f64)> {
    let dim = mat.nrows();
    let mut worst: Option<(usize, usize, f64)> = None;
    for i in 0..dim {
        for j in (i + 1)..dim {
            let delta = Float::abs(mat[(i, j)] - mat[(j, i)]);
            if worst.is_none_or(|(_, _, d)| delta > d) {
                worst = Some((i, j, delta));
            }
        }
    }
    worst
}

/// Collect every violated covariance invariant instead of stopping at the
/// first, for diagnostic front ends.
pub fn diagnose(mat: &DMatrix<f64>) -> Vec<CovDiagnostic> {
    let mut out = Vec::new();
    let dim = mat.nrows();
    if mat.ncols() != dim || dim == 0 || !dim.is_multiple_of(2) {
        // Shape problems make the remaining checks meaningless.
        return out;
    }
    if let Some((row, col, delta)) = worst_asymmetry(mat) {
        let scale = Float::max(1.0, Float::abs(mat[(row, col)]));
        if delta > SYM_TOL * scale {
            out.push(CovDiagnostic::Asymmetric { row, col, delta });
        }
    }
    let sym = crate::linalg::symmetrize(mat);
    let eig = sym.clone().symmetric_eigen();
    let min_eig = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, Float::min);
    if !(min_eig > 0.0) {
        out.push(CovDiagnostic::NotPositiveDefinite {
            min_eigenvalue: min_eig,
        });
        return out;
    }
    if let Ok(nus) = spectrum_of(&sym) {
        let nu_min = nus.last().copied().unwrap_or(1.0);
        if nu_min < 1.0 - PHYSICAL_TOL {
            out.push(CovDiagnostic::BelowVacuumNoise { nu_min });
        }
    }
    out
}

/// Symplectic eigenvalues, sorted descending; one entry per mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticSpectrum {
    values: Vec<f64>,
}

impl SymplecticSpectrum {
    /// Wrap a set of eigenvalues; they are sorted descending.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ZeroModes);
        }
        values.sort_unstable_by(|a, b| b.partial_cmp(a).expect("non-NaN eigenvalues"));
        Ok(Self { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Product of the eigenvalues (equals sqrt(det V) for the source matrix).
    pub fn product(&self) -> f64 {
        self.values.iter().product()
    }

    pub fn nu_min(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    pub fn nu_max(&self) -> f64 {
        self.values[0]
    }

    /// All eigenvalues at 1 within [`PHYSICAL_TOL`].
    pub fn is_pure(&self) -> bool {
        self.nu_max() <= 1.0 + PHYSICAL_TOL
    }
}

/// Moduli of the eigenvalues of `Omega V`, deduplicated from their +/- pairs
/// into n values sorted descending.
pub fn symplectic_spectrum(v: &CovMatrix) -> Result<SymplecticSpectrum> {
    SymplecticSpectrum::new(spectrum_of(v.matrix())?)
}

// Spectrum of a raw symmetric positive definite matrix, returned descending.
//
// Works on A = R Omega R with R the symmetric square root: A is antisymmetric
// and similar to Omega V, so -A^2 = A^T A is symmetric positive with each
// nu_k^2 appearing twice.
fn spectrum_of(mat: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = mat.nrows() / 2;
    let r = sym_sqrt(mat)?;
    let a = antisymmetrize(&(&r * omega(n) * &r));
    let m = a.transpose() * &a;
    let eig = m.symmetric_eigen();
    let mut moduli: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|w| Float::sqrt(Float::max(*w, 0.0)))
        .collect();
    moduli.sort_unstable_by(|a, b| b.partial_cmp(a).expect("non-NaN moduli"));
    let mut nus = Vec::with_capacity(n);
    for k in 0..n {
        let (hi, lo) = (moduli[2 * k], moduli[2 * k + 1]);
        if hi - lo > PAIR_TOL * Float::max(hi, 1.0) {
            return Err(Error::PairingFailure {
                left: hi,
                right: lo,
            });
        }
        nus.push(0.5 * (hi + lo));
    }
    Ok(nus)
}

/// Williamson normal form `V = S D S^T` with `S` symplectic and
/// `D = diag(nu_1, nu_1, ..., nu_n, nu_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WilliamsonDecomposition {
    s: DMatrix<f64>,
    spectrum: SymplecticSpectrum,
}

impl WilliamsonDecomposition {
    pub fn s(&self) -> &DMatrix<f64> {
        &self.s
    }

    pub fn spectrum(&self) -> &SymplecticSpectrum {
        &self.spectrum
    }

    /// The diagonal factor D with each eigenvalue duplicated.
    pub fn diag(&self) -> DMatrix<f64> {
        duplicated_diag(self.spectrum.values())
    }

    /// `S D S^T`, which must reproduce the source covariance matrix.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        &self.s * self.diag() * self.s.transpose()
    }
}

/// Diagonal matrix with every entry of `values` duplicated along the diagonal.
pub(crate) fn duplicated_diag(values: &[f64]) -> DMatrix<f64> {
    let dim = 2 * values.len();
    DMatrix::from_fn(dim, dim, |i, j| if i == j { values[i / 2] } else { 0.0 })
}

/// Compute the Williamson decomposition of a covariance matrix.
///
/// Algorithm: with `R = sym_sqrt(V)`, the matrix `A = R Omega R` is
/// antisymmetric, and the Hermitian eigenproblem of `iA` yields an
/// orthogonal `O` with `O^T A O` in canonical antisymmetric form; then
/// `S = R O D^{-1/2}` is symplectic and diagonalizes `V`. Eigenvectors of a
/// positive eigenvalue `nu` of `iA` split into real and imaginary parts
/// carrying the invariant plane of that mode, and remain orthonormal even
/// under degeneracies because the +nu and -nu eigenspaces are conjugate.
pub fn williamson(v: &CovMatrix) -> Result<WilliamsonDecomposition> {
    let n = v.n();
    let vm = v.matrix();
    let r = sym_sqrt(vm)?;
    let a = antisymmetrize(&(&r * omega(n) * &r));
    let h = a.map(|x| Complex::new(0.0, x));
    let eig = h.symmetric_eigen();

    // Keep the -nu half of the +/- nu pairs, with eigenvectors. For the
    // eigenvector z = u + iv of -nu one has A u = -nu v and A v = nu u, so
    // the column pair (sqrt(2) u, sqrt(2) v) realizes the canonical block;
    // this orientation reduces to O = I on already-diagonal input.
    let mut negative: Vec<(f64, usize)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, w)| **w < 0.0)
        .map(|(i, w)| (-*w, i))
        .collect();
    if negative.len() != n {
        return Err(Error::PairingFailure {
            left: negative.len() as f64,
            right: n as f64,
        });
    }
    negative.sort_unstable_by(|a, b| b.0.partial_cmp(&a.0).expect("non-NaN eigenvalues"));

    let dim = 2 * n;
    let sqrt2 = Float::sqrt(2.0);
    let mut o = DMatrix::<f64>::zeros(dim, dim);
    for (k, (_, idx)) in negative.iter().enumerate() {
        let z = eig.eigenvectors.column(*idx);
        // Deterministic phase: make the first component of maximal modulus
        // real and positive.
        let mut lead = 0;
        let mut best = 0.0;
        for (row, c) in z.iter().enumerate() {
            let m = c.re * c.re + c.im * c.im;
            if m > best * (1.0 + 1e-9) {
                best = m;
                lead = row;
            }
        }
        let phase = z[lead] / Complex::new(Float::sqrt(best), 0.0);
        for row in 0..dim {
            let c = z[row] / phase;
            o[(row, 2 * k)] = sqrt2 * c.re;
            o[(row, 2 * k + 1)] = sqrt2 * c.im;
        }
    }

    let nus: Vec<f64> = negative.iter().map(|(w, _)| *w).collect();
    let inv_sqrt = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            1.0 / Float::sqrt(nus[i / 2])
        } else {
            0.0
        }
    });
    let s = &r * &o * inv_sqrt;

    let spectrum = SymplecticSpectrum::new(nus)?;
    let decomposition = WilliamsonDecomposition { s, spectrum };

    let sym_res = symplectic_residual(&decomposition.s);
    let recon_res = max_abs(&(decomposition.reconstruct() - vm));
    let gate = RECON_TOL * Float::max(1.0, max_abs(vm));
    if sym_res > RECON_TOL || recon_res > gate {
        return Err(Error::DecompositionFailure {
            residual: Float::max(sym_res, recon_res),
        });
    }
    Ok(decomposition)
}

/// Seeded random symplectic matrix `exp(Omega H)` with `H` random symmetric
/// scaled by `intensity`; intensity 0 gives the identity exactly.
pub fn random_symplectic(seed: u64, n: usize, intensity: f64) -> DMatrix<f64> {
    let dim = 2 * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = DMatrix::<f64>::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let x = intensity * rng.gen_range(-1.0..1.0);
            h[(i, j)] = x;
            h[(j, i)] = x;
        }
    }
    expm(&(omega(n) * h))
}
