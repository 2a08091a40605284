//! p-adic wavelets, p-adic Mellin transforms and the local "parton" states
//! of Hecke eigenforms, with numerical cross-checks against classical
//! L-series, theta series and Bessel representations.

pub mod analytic;
pub mod arith;
pub mod error;
pub mod numeric;
pub mod padic;
pub mod wavelets;

pub use error::{Error, Result};
pub mod coeffs;
pub mod dirichlet;
pub mod parton;
pub mod pmellin;
pub mod cli;
