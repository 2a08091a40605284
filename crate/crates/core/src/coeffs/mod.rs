//! Multiplicative coefficient streams and their oracles.

mod chebyshev;
mod stream;
mod tau;

pub use chebyshev::{chebyshev_product_coeffs, chebyshev_u, chebyshev_u_trig, convolution_coeffs};
pub use stream::{coefficient_bound_check, BoundReport, CoefficientStream, StreamKind};
pub use tau::ramanujan_tau_table;
