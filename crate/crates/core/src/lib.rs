//! Orthogonal polynomials on the unit ball and the solid paraboloid, the
//! closed-form Fourier transforms of their wrapped versions, and the A/B
//! special-function families those transforms produce.
//!
//! Everything evaluates in complex double precision. The [`verifier`] module
//! checks the closed forms against independent quadrature and series oracles,
//! and [`sweep`] drives batches of those checks for the `pfverify` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bases;
pub mod classical;
pub mod error;
pub mod eval;
pub mod hypergeometric;
pub mod quadrature;
pub mod scalar;
pub mod sweep;
pub mod transform;
pub mod verifier;

pub use error::{Error, Result};
pub use scalar::{c64, C64};
