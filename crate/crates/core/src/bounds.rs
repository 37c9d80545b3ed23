//! Error-probability bounds for discriminating two Gaussian states.
//!
//! The s-parametrized quantities evaluated here, for a pair of states with
//! symplectic spectra {alpha_k} and {beta_k}:
//!
//! * `q_s`: Tr(rho_A^s rho_B^{1-s}), from the normal-mode formula with the
//!   displacement factor; `q_bar_s` drops the displacement factor.
//! * `m_s`: the spectrum-only sum-form bound obtained through the Minkowski
//!   determinant inequality; `q_bar_s <= m_s` pointwise.
//! * `y_s`: the spectrum-only product-form bound obtained through Young's
//!   inequality; `m_s <= y_s` pointwise.
//!
//! Minimizing over s in [0, 1] and scaling by the copy count N gives the
//! reported bounds: the quantum Chernoff bound (1/2)(inf q_s)^N, the
//! Bhattacharyya value at s = 1/2, and the Minkowski/Young counterparts.
//! Single-mode pairs additionally get the fidelity and its two-sided
//! sandwich on the single-copy error probability.
//!
//! Endpoint semantics: s = 0 (respectively s = 1) is admissible only when
//! state A (respectively B) is pure; the evaluation then clamps that
//! spectrum to 1 exactly. For full-rank states the endpoint limits equal 1,
//! so the infimum search replaces them by an epsilon-inset evaluation.

use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};
use num_traits::Float;

use crate::error::{Error, Result};
use crate::fock;
use crate::functions::{lambda_func, ln_g_func, ln_gamma_func, ln_psi_func};
use crate::linalg::{symmetrize, SpdFactor};
use crate::states::GaussianState;
use crate::symplectic::{duplicated_diag, williamson, SymplecticSpectrum, PHYSICAL_TOL};

use core::f64::consts::LN_2;

/// Additive slack for the bound-ordering invariants checked on every report.
pub const ORDERING_SLACK: f64 = 1e-10;
/// Slack for comparisons against the truncated-Fock oracle.
pub const ORACLE_SLACK: f64 = 1e-8;

/// One sample of an s-parametrized bound curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SPoint {
    pub s: f64,
    pub value: f64,
    pub log_value: f64,
}

impl SPoint {
    fn from_log(s: f64, log_value: f64) -> Self {
        Self {
            s,
            value: Float::exp(log_value),
            log_value,
        }
    }
}

/// Search configuration for the infimum over s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SGridConfig {
    /// Points of the coarse uniform scan over [0, 1].
    pub grid_points: usize,
    /// Inset used in place of an inadmissible endpoint.
    pub endpoint_epsilon: f64,
    /// Width in s at which golden-section refinement stops.
    pub refine_tolerance: f64,
}

impl Default for SGridConfig {
    fn default() -> Self {
        Self {
            grid_points: 201,
            endpoint_epsilon: 1e-6,
            refine_tolerance: 1e-10,
        }
    }
}

impl SGridConfig {
    pub fn with_grid_points(grid_points: usize) -> Self {
        Self {
            grid_points,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 3 {
            return Err(Error::BadGridConfig {
                reason: "grid_points must be at least 3",
            });
        }
        if !(self.endpoint_epsilon > 0.0 && self.endpoint_epsilon < 0.5) {
            return Err(Error::BadGridConfig {
                reason: "endpoint_epsilon must lie in (0, 0.5)",
            });
        }
        if !(self.refine_tolerance > 0.0) {
            return Err(Error::BadGridConfig {
                reason: "refine_tolerance must be positive",
            });
        }
        Ok(())
    }
}

/// Result of an infimum search over s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SMinimum {
    pub s_star: f64,
    pub value: f64,
    pub log_value: f64,
    /// The minimizer landed on an epsilon-inset endpoint.
    pub clamped: bool,
}

// Spectra and Williamson factors of a state pair, precomputed once so the
// s-scan does not repeat the decompositions.
struct QsContext {
    n: usize,
    s_a: DMatrix<f64>,
    s_b: DMatrix<f64>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    delta: DVector<f64>,
    pure_a: bool,
    pure_b: bool,
}

fn check_s(s: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::SRange { s });
    }
    Ok(())
}

// Spectrum used when an endpoint puts exponent 0 on this state: every
// eigenvalue clamped to exactly 1. Admissible only for pure states.
fn clamped_pure(spec: &[f64]) -> Vec<f64> {
    spec.iter().map(|_| 1.0).collect()
}

fn endpoint_check(s: f64, spec: &[f64], pure: bool) -> Result<()> {
    if !pure {
        let (mode, nu) =
            spec.iter().enumerate().fold(
                (0, 1.0),
                |acc, (i, &nu)| if nu > acc.1 { (i, nu) } else { acc },
            );
        return Err(Error::EndpointDivergence { s, mode, nu });
    }
    Ok(())
}

impl QsContext {
    fn new(a: &GaussianState, b: &GaussianState) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::ModeMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        let wa = williamson(a.cov())?;
        let wb = williamson(b.cov())?;
        let pure_a = wa.spectrum().is_pure();
        let pure_b = wb.spectrum().is_pure();
        Ok(Self {
            n: a.n(),
            alpha: wa.spectrum().values().to_vec(),
            beta: wb.spectrum().values().to_vec(),
            s_a: wa.s().clone(),
            s_b: wb.s().clone(),
            delta: a.mean() - b.mean(),
            pure_a,
            pure_b,
        })
    }

    fn eval(&self, s: f64, with_displacement: bool) -> Result<SPoint> {
        check_s(s)?;
        let alpha = if s == 0.0 {
            endpoint_check(s, &self.alpha, self.pure_a)?;
            clamped_pure(&self.alpha)
        } else {
            self.alpha.clone()
        };
        let beta = if s == 1.0 {
            endpoint_check(s, &self.beta, self.pure_b)?;
            clamped_pure(&self.beta)
        } else {
            self.beta.clone()
        };

        let mut log_norm = 0.0;
        for &x in &alpha {
            log_norm += ln_g_func(s, x)?;
        }
        for &x in &beta {
            log_norm += ln_g_func(1.0 - s, x)?;
        }

        let moved_a: Result<Vec<f64>> = alpha.iter().map(|&x| lambda_func(s, x)).collect();
        let moved_b: Result<Vec<f64>> = beta.iter().map(|&x| lambda_func(1.0 - s, x)).collect();
        let va = &self.s_a * duplicated_diag(&moved_a?) * self.s_a.transpose();
        let vb = &self.s_b * duplicated_diag(&moved_b?) * self.s_b.transpose();
        let w = symmetrize(&(va + vb));
        let factor = SpdFactor::new(&w)?;

        let mut log_q = self.n as f64 * LN_2 + log_norm - 0.5 * factor.log_det();
        if with_displacement {
            log_q -= 0.5 * factor.quad_form(&self.delta)?;
        }
        Ok(SPoint::from_log(s, log_q))
    }
}

/// `Tr(rho_A^s rho_B^{1-s})` from covariance data.
pub fn q_s(a: &GaussianState, b: &GaussianState, s: f64) -> Result<SPoint> {
    QsContext::new(a, b)?.eval(s, true)
}

/// `q_s` without the displacement factor; an upper bound on `q_s`.
pub fn q_bar_s(a: &GaussianState, b: &GaussianState, s: f64) -> Result<SPoint> {
    QsContext::new(a, b)?.eval(s, false)
}

fn spectra_checked<'a>(
    spec_a: &'a SymplecticSpectrum,
    spec_b: &'a SymplecticSpectrum,
) -> Result<(&'a [f64], &'a [f64], usize)> {
    if spec_a.n() != spec_b.n() {
        return Err(Error::ModeMismatch {
            left: spec_a.n(),
            right: spec_b.n(),
        });
    }
    Ok((spec_a.values(), spec_b.values(), spec_a.n()))
}

fn spectrum_is_pure(spec: &[f64]) -> bool {
    spec.iter().all(|&nu| nu <= 1.0 + PHYSICAL_TOL)
}

fn log_sum_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    hi + Float::ln_1p(Float::exp(lo - hi))
}

fn m_point(
    alpha: &[f64],
    beta: &[f64],
    n: usize,
    s: f64,
    pure_a: bool,
    pure_b: bool,
) -> Result<SPoint> {
    check_s(s)?;
    let alpha = if s == 0.0 {
        endpoint_check(s, alpha, pure_a)?;
        clamped_pure(alpha)
    } else {
        alpha.to_vec()
    };
    let beta = if s == 1.0 {
        endpoint_check(s, beta, pure_b)?;
        clamped_pure(beta)
    } else {
        beta.to_vec()
    };
    let mut ln_p1 = 0.0;
    let mut ln_p2 = 0.0;
    for (&x, &y) in alpha.iter().zip(beta.iter()) {
        ln_p1 += ln_psi_func(s, x, y, n)?;
        ln_p2 += ln_psi_func(1.0 - s, y, x, n)?;
    }
    let log_m = n as f64 * (2.0 * LN_2 - log_sum_exp(ln_p1, ln_p2));
    Ok(SPoint::from_log(s, log_m))
}

fn y_point(
    alpha: &[f64],
    beta: &[f64],
    n: usize,
    s: f64,
    pure_a: bool,
    pure_b: bool,
) -> Result<SPoint> {
    check_s(s)?;
    let alpha = if s == 0.0 {
        endpoint_check(s, alpha, pure_a)?;
        clamped_pure(alpha)
    } else {
        alpha.to_vec()
    };
    let beta = if s == 1.0 {
        endpoint_check(s, beta, pure_b)?;
        clamped_pure(beta)
    } else {
        beta.to_vec()
    };
    let mut log_y = n as f64 * LN_2;
    for (&x, &y) in alpha.iter().zip(beta.iter()) {
        log_y += ln_gamma_func(s, x)? + ln_gamma_func(1.0 - s, y)?;
    }
    Ok(SPoint::from_log(s, log_y))
}

/// Sum-form spectrum-only bound; `q_bar_s <= m_s` pointwise.
pub fn m_s(spec_a: &SymplecticSpectrum, spec_b: &SymplecticSpectrum, s: f64) -> Result<SPoint> {
    let (alpha, beta, n) = spectra_checked(spec_a, spec_b)?;
    m_point(alpha, beta, n, s, spec_a.is_pure(), spec_b.is_pure())
}

/// Product-form spectrum-only bound; `m_s <= y_s` pointwise.
pub fn y_s(spec_a: &SymplecticSpectrum, spec_b: &SymplecticSpectrum, s: f64) -> Result<SPoint> {
    let (alpha, beta, n) = spectra_checked(spec_a, spec_b)?;
    y_point(alpha, beta, n, s, spec_a.is_pure(), spec_b.is_pure())
}

/// Minimize an s-parametrized bound over [0, 1].
///
/// A coarse uniform scan is refined by golden-section search around the
/// best bracket. The true endpoints are evaluated only when admissible
/// (`admit_zero` / `admit_one`); otherwise the scan is inset by
/// `endpoint_epsilon`. Ties resolve toward the smallest s.
pub fn minimize_over_s<F>(
    f: F,
    admit_zero: bool,
    admit_one: bool,
    config: &SGridConfig,
) -> Result<SMinimum>
where
    F: Fn(f64) -> Result<SPoint>,
{
    config.validate()?;
    let k = config.grid_points;
    let eps = config.endpoint_epsilon;
    let lo_end = if admit_zero { 0.0 } else { eps };
    let hi_end = if admit_one { 1.0 } else { 1.0 - eps };

    let grid = |i: usize| -> f64 {
        if i == 0 {
            lo_end
        } else if i == k - 1 {
            hi_end
        } else {
            i as f64 / (k - 1) as f64
        }
    };

    let eval = |s: f64| -> Result<SPoint> {
        let point = f(s)?;
        if !point.log_value.is_finite() {
            return Err(Error::NonFinite { s });
        }
        Ok(point)
    };

    let mut best = eval(grid(0))?;
    let mut best_idx = 0usize;
    for i in 1..k {
        let point = eval(grid(i))?;
        if point.log_value < best.log_value {
            best = point;
            best_idx = i;
        }
    }

    // Golden-section refinement inside the bracket around the scan minimum.
    let mut a = grid(best_idx.saturating_sub(1));
    let mut b = grid((best_idx + 1).min(k - 1));
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut refined = best;
    if b > a {
        let mut x1 = b - INV_PHI * (b - a);
        let mut x2 = a + INV_PHI * (b - a);
        let mut f1 = eval(x1)?;
        let mut f2 = eval(x2)?;
        let mut guard = 0;
        while b - a > config.refine_tolerance && guard < 200 {
            if f1.log_value <= f2.log_value {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - INV_PHI * (b - a);
                f1 = eval(x1)?;
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + INV_PHI * (b - a);
                f2 = eval(x2)?;
            }
            guard += 1;
        }
        refined = if f1.log_value <= f2.log_value { f1 } else { f2 };
    }

    let winner = if refined.log_value < best.log_value {
        refined
    } else {
        best
    };
    let clamped = (!admit_zero && winner.s == eps) || (!admit_one && winner.s == 1.0 - eps);
    Ok(SMinimum {
        s_star: winner.s,
        value: winner.value,
        log_value: winner.log_value,
        clamped,
    })
}

/// N-copy bound derived from the infimum of an s-curve: `(1/2) inf^N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizedBound {
    pub s_star: f64,
    pub value: f64,
    pub log_value: f64,
    pub clamped: bool,
}

fn scaled(min: SMinimum, copies: u32) -> MinimizedBound {
    MinimizedBound {
        s_star: min.s_star,
        value: 0.5 * Float::powi(min.value, copies as i32),
        log_value: copies as f64 * min.log_value - LN_2,
        clamped: min.clamped,
    }
}

/// Quantum Chernoff bound `(1/2)(inf_s q_s)^N` with the error exponent
/// `kappa = -log inf_s q_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffBound {
    pub s_star: f64,
    pub value: f64,
    pub log_value: f64,
    pub kappa: f64,
    pub clamped: bool,
}

fn checked_copies(copies: u32) -> Result<()> {
    if copies == 0 {
        return Err(Error::ZeroCopies);
    }
    Ok(())
}

pub fn chernoff_bound(
    a: &GaussianState,
    b: &GaussianState,
    copies: u32,
    config: &SGridConfig,
) -> Result<ChernoffBound> {
    checked_copies(copies)?;
    let ctx = QsContext::new(a, b)?;
    let min = minimize_over_s(|s| ctx.eval(s, true), ctx.pure_a, ctx.pure_b, config)?;
    let at_n = scaled(min, copies);
    Ok(ChernoffBound {
        s_star: at_n.s_star,
        value: at_n.value,
        log_value: at_n.log_value,
        kappa: -min.log_value,
        clamped: at_n.clamped,
    })
}

/// Bhattacharyya bound: the s = 1/2 evaluation, `(1/2) q_{1/2}^N`.
pub fn bhattacharyya_bound(a: &GaussianState, b: &GaussianState, copies: u32) -> Result<f64> {
    checked_copies(copies)?;
    let point = q_s(a, b, 0.5)?;
    Ok(0.5 * Float::powi(point.value, copies as i32))
}

fn minkowski_from_spectra(
    alpha: &[f64],
    beta: &[f64],
    n: usize,
    copies: u32,
    config: &SGridConfig,
) -> Result<MinimizedBound> {
    let pure_a = spectrum_is_pure(alpha);
    let pure_b = spectrum_is_pure(beta);
    let min = minimize_over_s(
        |s| m_point(alpha, beta, n, s, pure_a, pure_b),
        pure_a,
        pure_b,
        config,
    )?;
    Ok(scaled(min, copies))
}

fn young_from_spectra(
    alpha: &[f64],
    beta: &[f64],
    n: usize,
    copies: u32,
    config: &SGridConfig,
) -> Result<MinimizedBound> {
    let pure_a = spectrum_is_pure(alpha);
    let pure_b = spectrum_is_pure(beta);
    let min = minimize_over_s(
        |s| y_point(alpha, beta, n, s, pure_a, pure_b),
        pure_a,
        pure_b,
        config,
    )?;
    Ok(scaled(min, copies))
}

/// Minkowski bound `(1/2)(inf_s m_s)^N`; only the spectra are consumed.
pub fn minkowski_bound(
    a: &GaussianState,
    b: &GaussianState,
    copies: u32,
    config: &SGridConfig,
) -> Result<MinimizedBound> {
    checked_copies(copies)?;
    let (sa, sb) = (a.spectrum()?, b.spectrum()?);
    let (alpha, beta, n) = spectra_checked(&sa, &sb)?;
    minkowski_from_spectra(alpha, beta, n, copies, config)
}

/// Young bound `(1/2)(inf_s y_s)^N`; only the spectra are consumed.
pub fn young_bound(
    a: &GaussianState,
    b: &GaussianState,
    copies: u32,
    config: &SGridConfig,
) -> Result<MinimizedBound> {
    checked_copies(copies)?;
    let (sa, sb) = (a.spectrum()?, b.spectrum()?);
    let (alpha, beta, n) = spectra_checked(&sa, &sb)?;
    young_from_spectra(alpha, beta, n, copies, config)
}

fn det2(m: &DMatrix<f64>) -> f64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Fidelity between two single-mode Gaussian states.
pub fn fidelity_one_mode(a: &GaussianState, b: &GaussianState) -> Result<f64> {
    if a.n() != 1 || b.n() != 1 {
        return Err(Error::UnsupportedModeCount {
            n: a.n().max(b.n()),
        });
    }
    let sum = a.cov().matrix() + b.cov().matrix();
    let big_delta = det2(&sum);
    let small_delta = Float::max(
        (det2(a.cov().matrix()) - 1.0) * (det2(b.cov().matrix()) - 1.0),
        0.0,
    );
    let factor = SpdFactor::new(&sum)?;
    let q = -0.5 * factor.quad_form(&(a.mean() - b.mean()))?;
    // 2 e^q / (sqrt(D + d) - sqrt(d)), rationalized to avoid cancellation
    let f = 2.0 * Float::exp(q) * (Float::sqrt(big_delta + small_delta) + Float::sqrt(small_delta))
        / big_delta;
    Ok(Float::min(f, 1.0))
}

/// Lower/upper sandwich on the single-copy error probability from the
/// fidelity: `(1 - sqrt(1 - F))/2` and `sqrt(F)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelitySandwich {
    pub f_minus: f64,
    pub f_plus: f64,
}

pub fn fidelity_bounds(f: f64) -> Result<FidelitySandwich> {
    if !(-1e-12..=1.0 + 1e-12).contains(&f) {
        return Err(Error::FidelityDomain { f });
    }
    let f = f.clamp(0.0, 1.0);
    Ok(FidelitySandwich {
        f_minus: 0.5 * (1.0 - Float::sqrt(1.0 - f)),
        f_plus: 0.5 * Float::sqrt(f),
    })
}

/// Single-copy Chernoff bound when the first state is pure: exactly half
/// the fidelity.
pub fn pure_case_chernoff(pure: &GaussianState, other: &GaussianState) -> Result<f64> {
    let spec = pure.spectrum()?;
    if !spec.is_pure() {
        return Err(Error::NotPure {
            nu_max: spec.nu_max(),
        });
    }
    Ok(fidelity_one_mode(pure, other)? / 2.0)
}

/// Fidelity data attached to single-mode reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityReport {
    pub fidelity: f64,
    pub f_minus: f64,
    pub f_plus: f64,
}

/// Every bound computed for a state pair at a copy count, cross-checked
/// against the ordering chain before being returned.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub copies: u32,
    pub chernoff: ChernoffBound,
    pub bhattacharyya: f64,
    pub minkowski: MinimizedBound,
    pub young: MinimizedBound,
    /// Present for single-mode pairs only.
    pub fidelity: Option<FidelityReport>,
    /// Exact single-copy Helstrom error from the Fock oracle, when requested
    /// and representable.
    pub helstrom: Option<f64>,
}

fn ordering(which: &'static str, lhs: f64, rhs: f64, slack: f64) -> Result<()> {
    if lhs > rhs + slack {
        return Err(Error::OrderingViolation { which, lhs, rhs });
    }
    Ok(())
}

impl BoundReport {
    // Ordering invariants the bounds must satisfy; runs on every report
    // assembly. A violation indicates a numerical defect upstream.
    fn validate(&self) -> Result<()> {
        ordering(
            "chernoff <= bhattacharyya",
            self.chernoff.value,
            self.bhattacharyya,
            ORDERING_SLACK,
        )?;
        ordering(
            "chernoff <= minkowski",
            self.chernoff.value,
            self.minkowski.value,
            ORDERING_SLACK,
        )?;
        ordering(
            "minkowski <= young",
            self.minkowski.value,
            self.young.value,
            ORDERING_SLACK,
        )?;
        for (name, value) in [
            ("chernoff", self.chernoff.value),
            ("bhattacharyya", self.bhattacharyya),
            ("minkowski", self.minkowski.value),
            ("young", self.young.value),
        ] {
            if !(value > 0.0 && value <= 0.5 + 1e-12) {
                return Err(Error::OrderingViolation {
                    which: name,
                    lhs: value,
                    rhs: 0.5,
                });
            }
        }
        if self.copies == 1 {
            if let Some(fid) = &self.fidelity {
                ordering(
                    "f_minus <= chernoff",
                    fid.f_minus,
                    self.chernoff.value,
                    ORDERING_SLACK,
                )?;
                ordering(
                    "chernoff <= f_plus",
                    self.chernoff.value,
                    fid.f_plus,
                    ORDERING_SLACK,
                )?;
            }
            if let Some(helstrom) = self.helstrom {
                ordering(
                    "helstrom <= chernoff",
                    helstrom,
                    self.chernoff.value,
                    ORACLE_SLACK,
                )?;
                if let Some(fid) = &self.fidelity {
                    ordering("f_minus <= helstrom", fid.f_minus, helstrom, ORACLE_SLACK)?;
                }
            }
        }
        Ok(())
    }
}

/// Assemble the full report for a pair: Chernoff, Bhattacharyya, Minkowski
/// and Young bounds at the given copy count, fidelity data when single-mode,
/// and optionally the exact Helstrom error from the Fock oracle.
pub fn full_report(
    a: &GaussianState,
    b: &GaussianState,
    copies: u32,
    config: &SGridConfig,
    include_oracle: bool,
) -> Result<BoundReport> {
    checked_copies(copies)?;
    let ctx = QsContext::new(a, b)?;
    let min = minimize_over_s(|s| ctx.eval(s, true), ctx.pure_a, ctx.pure_b, config)?;
    let chernoff_at_n = scaled(min, copies);
    let chernoff = ChernoffBound {
        s_star: chernoff_at_n.s_star,
        value: chernoff_at_n.value,
        log_value: chernoff_at_n.log_value,
        kappa: -min.log_value,
        clamped: chernoff_at_n.clamped,
    };
    let bhattacharyya = 0.5 * Float::powi(ctx.eval(0.5, true)?.value, copies as i32);
    let minkowski = minkowski_from_spectra(&ctx.alpha, &ctx.beta, ctx.n, copies, config)?;
    let young = young_from_spectra(&ctx.alpha, &ctx.beta, ctx.n, copies, config)?;

    let fidelity = if ctx.n == 1 {
        let f = fidelity_one_mode(a, b)?;
        let sandwich = fidelity_bounds(f)?;
        Some(FidelityReport {
            fidelity: f,
            f_minus: sandwich.f_minus,
            f_plus: sandwich.f_plus,
        })
    } else {
        None
    };

    let helstrom = if include_oracle {
        Some(fock::helstrom_from_states(a, b, fock::DEFAULT_TAIL_CAP)?)
    } else {
        None
    };

    let report = BoundReport {
        copies,
        chernoff,
        bhattacharyya,
        minkowski,
        young,
        fidelity,
        helstrom,
    };
    report.validate()?;
    Ok(report)
}
