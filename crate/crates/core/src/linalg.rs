//! Dense symmetric-matrix utilities: Cholesky factorization with
//! log-determinant and solves, symmetric square roots, and a
//! scaling-and-squaring matrix exponential.

use nalgebra::{DMatrix, DVector};
use num_traits::Float;

use crate::error::{Error, Result};

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
///
/// Factoring once gives the log-determinant, linear solves and quadratic
/// forms without refactoring.
#[derive(Debug, Clone)]
pub struct SpdFactor {
    lower: DMatrix<f64>,
}

impl SpdFactor {
    /// Factor `m = L L^T`. Fails with the first pivot index at which the
    /// remaining diagonal is not strictly positive.
    pub fn new(m: &DMatrix<f64>) -> Result<Self> {
        let n = m.nrows();
        if m.ncols() != n {
            return Err(Error::BadShape {
                rows: n,
                cols: m.ncols(),
            });
        }
        let mut l = DMatrix::<f64>::zeros(n, n);
        for j in 0..n {
            let mut d = m[(j, j)];
            for k in 0..j {
                d -= l[(j, k)] * l[(j, k)];
            }
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::NotPositiveDefinite { pivot: j });
            }
            let root = Float::sqrt(d);
            l[(j, j)] = root;
            for i in (j + 1)..n {
                let mut s = m[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                l[(i, j)] = s / root;
            }
        }
        Ok(Self { lower: l })
    }

    pub fn dim(&self) -> usize {
        self.lower.nrows()
    }

    /// log det M = 2 sum_j log L_jj
    pub fn log_det(&self) -> f64 {
        2.0 * (0..self.lower.nrows())
            .map(|j| Float::ln(self.lower[(j, j)]))
            .sum::<f64>()
    }

    /// Solve `M x = b`.
    pub fn solve(&self, b: &DVector<f64>) -> Result<DVector<f64>> {
        let y = self.forward(b)?;
        let n = self.dim();
        let mut x = y;
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in (i + 1)..n {
                s -= self.lower[(k, i)] * x[k];
            }
            x[i] = s / self.lower[(i, i)];
        }
        Ok(x)
    }

    /// Quadratic form `b^T M^{-1} b`, evaluated as |L^{-1} b|^2.
    pub fn quad_form(&self, b: &DVector<f64>) -> Result<f64> {
        let y = self.forward(b)?;
        Ok(y.iter().map(|v| v * v).sum())
    }

    fn forward(&self, b: &DVector<f64>) -> Result<DVector<f64>> {
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.len(),
            });
        }
        let mut y = b.clone();
        for i in 0..n {
            let mut s = y[i];
            for k in 0..i {
                s -= self.lower[(i, k)] * y[k];
            }
            y[i] = s / self.lower[(i, i)];
        }
        Ok(y)
    }
}

/// Log-determinant of a symmetric positive definite matrix together with the
/// solution of `M x = b`.
pub fn spd_logdet_and_solve(m: &DMatrix<f64>, b: &DVector<f64>) -> Result<(f64, DVector<f64>)> {
    let factor = SpdFactor::new(m)?;
    let x = factor.solve(b)?;
    Ok((factor.log_det(), x))
}

/// Symmetric square root `R` of a symmetric positive definite matrix,
/// with `R = R^T` and `R R = M`.
pub fn sym_sqrt(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::BadShape {
            rows: n,
            cols: m.ncols(),
        });
    }
    let eig = m.clone().symmetric_eigen();
    for (i, w) in eig.eigenvalues.iter().enumerate() {
        if !(*w > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: i });
        }
    }
    let roots = DMatrix::from_diagonal(&eig.eigenvalues.map(Float::sqrt));
    let r = &eig.eigenvectors * roots * eig.eigenvectors.transpose();
    Ok(symmetrize(&r))
}

/// `(m + m^T) / 2`
pub fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

/// `(m - m^T) / 2`
pub fn antisymmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m - m.transpose()) * 0.5
}

/// Largest absolute entry.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, &x| Float::max(acc, Float::abs(x)))
}

/// Matrix exponential by scaling and squaring with a Taylor core.
///
/// The argument is scaled until its 1-norm is below 1/2, so the series
/// converges in a handful of terms; the result is then squared back.
pub fn expm(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let norm1 = (0..n)
        .map(|j| m.column(j).iter().map(|x| Float::abs(*x)).sum::<f64>())
        .fold(0.0, Float::max);
    let mut squarings = 0u32;
    let mut scaled = m.clone();
    if norm1 > 0.5 {
        squarings = Float::ceil(Float::log2(norm1 / 0.5)) as u32;
        scaled /= Float::powi(2.0, squarings as i32);
    }
    let mut result = DMatrix::<f64>::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    for k in 1..=40u32 {
        term = (&term * &scaled) / f64::from(k);
        result += &term;
        if max_abs(&term) < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    // Cofactor expansion, usable up to n = 3; independent of the Cholesky path.
    fn det_bruteforce(m: &DMatrix<f64>) -> f64 {
        match m.nrows() {
            1 => m[(0, 0)],
            2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
            3 => {
                m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
                    - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
                    + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
            }
            _ => panic!("brute-force determinant only up to 3x3"),
        }
    }

    fn random_spd(seed: u64, n: usize) -> DMatrix<f64> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        &g * g.transpose() + DMatrix::identity(n, n) * 0.5
    }

    #[test]
    fn logdet_and_solve_diagonal_cases() {
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 2.0]);
        let b = DVector::from_column_slice(&[1.0, 0.0]);
        let (logdet, x) = spd_logdet_and_solve(&m, &b).unwrap();
        assert!((logdet - 2.0 * core::f64::consts::LN_2).abs() < 1e-14);
        assert!((x[0] - 0.5).abs() < 1e-14 && x[1].abs() < 1e-14);

        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 4.0]);
        let b = DVector::from_column_slice(&[2.0, 2.0]);
        let (logdet, x) = spd_logdet_and_solve(&m, &b).unwrap();
        assert!((logdet - 4.0f64.ln()).abs() < 1e-14);
        assert!((x[0] - 2.0).abs() < 1e-14 && (x[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn logdet_and_solve_match_bruteforce() {
        for seed in 0..50u64 {
            for n in 1..=3usize {
                let m = random_spd(seed * 7 + n as u64, n);
                let b = DVector::from_fn(n, |i, _| (i + 1) as f64);
                let (logdet, x) = spd_logdet_and_solve(&m, &b).unwrap();
                let det = det_bruteforce(&m);
                assert!(
                    (logdet - det.ln()).abs() <= 1e-10 * det.ln().abs().max(1.0),
                    "logdet mismatch: {logdet} vs {}",
                    det.ln()
                );
                let residual = (&m * &x - &b).norm() / b.norm();
                assert!(residual < 1e-10, "solve residual {residual}");
            }
        }
    }

    #[test]
    fn cholesky_reports_failing_pivot() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        assert_eq!(
            SpdFactor::new(&m).unwrap_err(),
            Error::NotPositiveDefinite { pivot: 1 }
        );
    }

    #[test]
    fn sym_sqrt_cases() {
        let id = DMatrix::<f64>::identity(3, 3);
        assert!(max_abs(&(sym_sqrt(&id).unwrap() - &id)) < 1e-14);

        let m = DMatrix::from_row_slice(2, 2, &[4.0, 0.0, 0.0, 9.0]);
        let r = sym_sqrt(&m).unwrap();
        assert!((r[(0, 0)] - 2.0).abs() < 1e-12 && (r[(1, 1)] - 3.0).abs() < 1e-12);

        for seed in 0..20u64 {
            let m = random_spd(seed, 5);
            let r = sym_sqrt(&m).unwrap();
            assert!(max_abs(&(&r - r.transpose())) < 1e-12);
            let err = max_abs(&(&r * &r - &m)) / max_abs(&m);
            assert!(err < 1e-10, "sqrt residual {err}");
        }
    }

    #[test]
    fn sym_sqrt_rejects_indefinite() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            sym_sqrt(&m),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn expm_matches_series_cases() {
        // exp(0) = I
        let z = DMatrix::<f64>::zeros(3, 3);
        assert!(max_abs(&(expm(&z) - DMatrix::identity(3, 3))) == 0.0);

        // exp(diag(a)) = diag(e^a)
        let d = DMatrix::from_diagonal(&DVector::from_column_slice(&[0.3, -1.2, 2.5]));
        let e = expm(&d);
        for (i, a) in [0.3, -1.2, 2.5].iter().enumerate() {
            assert!((e[(i, i)] - a.exp()).abs() < 1e-13);
        }

        // rotation generator: exp(t J) = [[cos t, sin t], [-sin t, cos t]]
        let t = 0.7f64;
        let j = DMatrix::from_row_slice(2, 2, &[0.0, t, -t, 0.0]);
        let e = expm(&j);
        let expected = [t.cos(), t.sin(), -t.sin(), t.cos()];
        for (k, v) in expected.iter().enumerate() {
            assert!((e[(k / 2, k % 2)] - v).abs() < 1e-13);
        }
    }
}
