//! Scalar calculus on symplectic eigenvalues.
//!
//! All functions act on an eigenvalue `x >= 1` and an exponent `p >= 0`:
//!
//! * `phi_plus` / `phi_minus`: (x+1)^p +/- (x-1)^p, the basic pair
//! * `g_func`: 2^p / phi_minus, the per-mode power-trace factor
//! * `lambda_func`: phi_plus / phi_minus, the eigenvalue map of power states
//! * `gamma_func`: [phi_plus * phi_minus]^(-1/2)
//! * `psi_func`: [phi_plus(p, x) * phi_minus(1-p, y)]^(1/n)
//!
//! At `x = 1` the factor `(x-1)^p` is taken to be 0 for every `p >= 0`
//! (support convention); this keeps all functions finite and continuous on
//! pure modes, including the `p = 0` endpoint. For mixed modes (`x > 1`),
//! `phi_minus` vanishes at `p = 0`, so `g_func`, `lambda_func` and
//! `gamma_func` diverge there and report an error.
//!
//! Internally everything is evaluated through logarithms of the ratio
//! `eta = (x-1)/(x+1) < 1`, which stays accurate for large `x` and for
//! exponents close to 0 or 1.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::symplectic::PHYSICAL_TOL;

use core::f64::consts::LN_2;

fn check_x(x: f64) -> Result<f64> {
    if !(x >= 1.0 - PHYSICAL_TOL) {
        return Err(Error::BelowOne { x });
    }
    Ok(Float::max(x, 1.0))
}

fn check_p(p: f64) -> Result<()> {
    if !(p >= 0.0) {
        return Err(Error::NegativePower { p });
    }
    Ok(())
}

// eta^p with the support convention: exactly 0 whenever x = 1, for any p.
fn eta_pow(p: f64, x: f64) -> f64 {
    let eta = (x - 1.0) / (x + 1.0);
    if eta <= 0.0 {
        0.0
    } else {
        Float::exp(p * Float::ln(eta))
    }
}

/// log of `(x+1)^p + (x-1)^p`; inputs must be pre-validated.
pub(crate) fn ln_phi_plus_raw(p: f64, x: f64) -> f64 {
    p * Float::ln(x + 1.0) + Float::ln_1p(eta_pow(p, x))
}

/// log of `(x+1)^p - (x-1)^p`; `-inf` when the difference vanishes.
pub(crate) fn ln_phi_minus_raw(p: f64, x: f64) -> f64 {
    p * Float::ln(x + 1.0) + Float::ln_1p(-eta_pow(p, x))
}

/// `(x+1)^p + (x-1)^p`
pub fn phi_plus(p: f64, x: f64) -> Result<f64> {
    check_p(p)?;
    let x = check_x(x)?;
    Ok(Float::exp(ln_phi_plus_raw(p, x)))
}

/// `(x+1)^p - (x-1)^p`
pub fn phi_minus(p: f64, x: f64) -> Result<f64> {
    check_p(p)?;
    let x = check_x(x)?;
    Ok(Float::exp(ln_phi_minus_raw(p, x)))
}

fn check_divergence(p: f64, x: f64) -> Result<()> {
    if p == 0.0 && x > 1.0 {
        return Err(Error::PowerDivergence { x });
    }
    Ok(())
}

/// log of `G_p(x) = 2^p / phi_minus(p, x)`, the per-mode factor of
/// `log Tr rho^p`.
pub fn ln_g_func(p: f64, x: f64) -> Result<f64> {
    check_p(p)?;
    let x = check_x(x)?;
    check_divergence(p, x)?;
    Ok(p * LN_2 - ln_phi_minus_raw(p, x))
}

/// `2^p / ((x+1)^p - (x-1)^p)`; equals 1 at p = 1 and on pure modes.
pub fn g_func(p: f64, x: f64) -> Result<f64> {
    Ok(Float::exp(ln_g_func(p, x)?))
}

/// `phi_plus / phi_minus`: the symplectic eigenvalue of the normalized
/// power state. Identity at p = 1; fixed point 1 on pure modes.
pub fn lambda_func(p: f64, x: f64) -> Result<f64> {
    check_p(p)?;
    let x = check_x(x)?;
    check_divergence(p, x)?;
    Ok(Float::exp(ln_phi_plus_raw(p, x) - ln_phi_minus_raw(p, x)))
}

/// log of `Gamma_p(x) = [(x+1)^{2p} - (x-1)^{2p}]^{-1/2}`.
pub fn ln_gamma_func(p: f64, x: f64) -> Result<f64> {
    check_p(p)?;
    let x = check_x(x)?;
    check_divergence(p, x)?;
    Ok(-0.5 * (ln_phi_plus_raw(p, x) + ln_phi_minus_raw(p, x)))
}

/// `[(x+1)^{2p} - (x-1)^{2p}]^{-1/2}`, equal to `2^{-p}` on pure modes.
pub fn gamma_func(p: f64, x: f64) -> Result<f64> {
    Ok(Float::exp(ln_gamma_func(p, x)?))
}

/// log of `Psi_p(x, y) = [phi_plus(p, x) * phi_minus(1-p, y)]^{1/n}`.
///
/// Requires `0 <= p <= 1`. May be `-inf` (a vanishing factor) at the
/// endpoints; never a domain error there.
pub fn ln_psi_func(p: f64, x: f64, y: f64, n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ExponentRange { p });
    }
    if n == 0 {
        return Err(Error::ZeroModes);
    }
    let x = check_x(x)?;
    let y = check_x(y)?;
    Ok((ln_phi_plus_raw(p, x) + ln_phi_minus_raw(1.0 - p, y)) / n as f64)
}

/// `[phi_plus(p, x) * phi_minus(1-p, y)]^{1/n}`
pub fn psi_func(p: f64, x: f64, y: f64, n: usize) -> Result<f64> {
    Ok(Float::exp(ln_psi_func(p, x, y, n)?))
}
