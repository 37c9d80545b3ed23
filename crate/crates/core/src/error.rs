//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while validating states or evaluating bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Mode count must be at least one.
    #[error("mode count must be at least 1")]
    ZeroModes,

    /// A matrix that must be square with even dimension is not.
    #[error("expected a square matrix of even dimension, got {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },

    /// Symmetry violated beyond tolerance.
    #[error("matrix not symmetric: |m[{row},{col}] - m[{col},{row}]| = {delta:e}")]
    NotSymmetric { row: usize, col: usize, delta: f64 },

    /// Cholesky or eigenvalue pivot failed; the index localizes the failure.
    #[error("matrix not positive definite (pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },

    /// A symplectic eigenvalue fell below the vacuum floor.
    #[error("covariance is not a physical state: smallest symplectic eigenvalue {nu_min} < 1")]
    BonaFideViolation { nu_min: f64 },

    /// Eigenvalue moduli expected to pair up did not match.
    #[error("eigenvalue pairing failed: moduli {left} and {right} differ beyond tolerance")]
    PairingFailure { left: f64, right: f64 },

    /// Williamson factors failed to reproduce the input matrix.
    #[error("decomposition residual {residual:e} exceeds tolerance")]
    DecompositionFailure { residual: f64 },

    /// Two states (or spectra) with different mode counts were combined.
    #[error("mode count mismatch: {left} vs {right}")]
    ModeMismatch { left: usize, right: usize },

    /// Vector length incompatible with the matrix it accompanies.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Scalar-function argument outside x >= 1.
    #[error("argument must be >= 1, got {x}")]
    BelowOne { x: f64 },

    /// Negative power exponent.
    #[error("power exponent must be nonnegative, got {p}")]
    NegativePower { p: f64 },

    /// Power exponent outside the required interval.
    #[error("exponent must lie in [0, 1], got {p}")]
    ExponentRange { p: f64 },

    /// Tr rho^p (and the functions built on it) diverge at p = 0 for mixed modes.
    #[error("power trace diverges at p = 0 for a mixed mode (x = {x})")]
    PowerDivergence { x: f64 },

    /// s outside [0, 1].
    #[error("s must lie in [0, 1], got {s}")]
    SRange { s: f64 },

    /// Endpoint s in {0, 1} requested for a state that is not pure.
    #[error("endpoint s = {s} diverges: mode {mode} has symplectic eigenvalue {nu} > 1")]
    EndpointDivergence { s: f64, mode: usize, nu: f64 },

    /// The minimizer hit a non-finite bound value.
    #[error("non-finite bound value at s = {s}")]
    NonFinite { s: f64 },

    /// Fidelity argument outside [0, 1].
    #[error("fidelity must lie in [0, 1], got {f}")]
    FidelityDomain { f: f64 },

    /// Operation restricted to single-mode states.
    #[error("operation supports single-mode states only, got n = {n}")]
    UnsupportedModeCount { n: usize },

    /// A pure state was required.
    #[error("state is not pure: largest symplectic eigenvalue {nu_max} > 1")]
    NotPure { nu_max: f64 },

    /// Fock truncation could not reach the requested tail mass.
    #[error("truncation tail mass {tail:e} exceeds cap {cap:e}")]
    TailMass { tail: f64, cap: f64 },

    /// Tail cap outside the supported range.
    #[error("tail cap must lie in (0, 1e-6], got {cap:e}")]
    BadTailCap { cap: f64 },

    /// A matrix expected to be positive semidefinite has a negative eigenvalue.
    #[error("matrix not positive semidefinite: eigenvalue {eigenvalue:e}")]
    NotPsd { eigenvalue: f64 },

    /// Fock-state trace drifted away from one.
    #[error("trace {trace} is not within tolerance of 1")]
    TraceNotUnit { trace: f64 },

    /// The pair is outside what the Fock oracle can represent.
    #[error("pair not representable in the Fock oracle: {reason}")]
    OracleUnsupported { reason: &'static str },

    /// A transform that must preserve the symplectic form does not.
    #[error("matrix is not symplectic: residual {residual:e}")]
    NotSymplectic { residual: f64 },

    /// A bound-ordering invariant failed while assembling a report.
    #[error("report invariant `{which}` violated: {lhs} vs {rhs}")]
    OrderingViolation {
        which: &'static str,
        lhs: f64,
        rhs: f64,
    },

    /// Grid configuration outside its invariants.
    #[error("invalid search grid configuration: {reason}")]
    BadGridConfig { reason: &'static str },

    /// Copy count must be at least one.
    #[error("copy count must be at least 1")]
    ZeroCopies,
}

pub type Result<T> = core::result::Result<T, Error>;
