//! Computable bounds for discriminating two multimode Gaussian states.
//!
//! Given two states as covariance matrices (plus displacements), this crate
//! evaluates:
//!
//! * the quantum Chernoff bound and its s-curve `Q_s`, via Williamson
//!   normal forms and the power-state calculus,
//! * the Bhattacharyya special case `s = 1/2`,
//! * the spectrum-only Minkowski and Young upper bounds, which need no
//!   diagonalizing symplectic matrices at all,
//! * the single-mode fidelity together with its two-sided error-probability
//!   sandwich,
//! * and, for single-mode thermal/coherent pairs, an exact Helstrom error
//!   from a truncated Fock-space oracle used to validate everything else.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `gaussbound` crate.
//!
//! ```
//! use gaussbound_core::bounds::{full_report, SGridConfig};
//! use gaussbound_core::GaussianState;
//!
//! // one copy of a vacuum state against a thermal state
//! let vacuum = GaussianState::vacuum(1).unwrap();
//! let thermal = GaussianState::thermal(&[2.0]).unwrap();
//! let report = full_report(&vacuum, &thermal, 1, &SGridConfig::default(), false).unwrap();
//!
//! // the spectrum-only bound is tight against the Chernoff bound here
//! assert!((report.chernoff.value - 1.0 / 3.0).abs() < 1e-9);
//! assert!((report.minkowski.value - report.chernoff.value).abs() < 1e-9);
//! assert!(report.minkowski.value <= report.young.value);
//! ```

#![no_std]
// Negated comparisons like `!(x > 0.0)` are NaN-rejecting domain guards.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod error;
pub mod fock;
pub mod functions;
pub mod linalg;
pub mod states;
pub mod symplectic;

pub use bounds::{full_report, BoundReport, SGridConfig};
pub use error::{Error, Result};
pub use states::GaussianState;
pub use symplectic::{CovMatrix, SymplecticForm, SymplecticSpectrum, WilliamsonDecomposition};
