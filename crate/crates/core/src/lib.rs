//! Generalized trigonometric and hyperbolic functions, the bivariate means
//! built from them, and a grid verifier for inequalities between those
//! means.
//!
//! Modules, from the bottom up:
//!
//! - [`quadrature`]: adaptive Gauss-Kronrod and tanh-sinh integration, Brent root finding
//! - [`special`]: gamma, digamma, beta, incomplete beta and `2F1`
//! - [`ptrig`]: `arcsin_p` and relatives, `sin_p`, `pi_p` and the constants `a_p`, `b_p`, `c_p`
//! - [`means`]: classical, power, Neuman-type and tilde means
//! - [`inequalities`]: executable claims with signed margins and grid scans
//! - [`report`]: CSV, JSON and table output
//! - [`cli`]: the `pmean` command line

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod inequalities;
pub mod means;
pub mod ptrig;
pub mod quadrature;
pub mod report;
pub mod special;

pub use error::{Error, Result};
pub use inequalities::{ClaimId, ClaimReport, Status, Variant};
pub use means::MeanInput;
pub use ptrig::PExponent;
