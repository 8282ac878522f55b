//! Numerical checks of every identity, each against an oracle that does not
//! share code with the closed form it checks: quadrature for orthogonality,
//! transforms and Parseval constants, plain series arithmetic for the
//! contiguous relations and the form equivalences.

pub mod contiguous;
pub mod forms;
pub mod fourier;
pub mod kernel;
pub mod orthogonality;
pub mod parseval;
mod report;

pub use report::{
    CaseHeader, ComplexValue, Family, IdentityId, Outcome, Residual, VerificationReport,
};
