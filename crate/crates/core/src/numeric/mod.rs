//! Quadrature and special functions used by the analytic layer.

mod gamma;
mod quadrature;
mod sum;

pub use gamma::{gamma, ln_gamma};
pub use quadrature::{integrate_adaptive, simpson, QuadResult};
pub use sum::CompensatedSum;
