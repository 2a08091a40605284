//! Arithmetic on ℚ_p at finite precision, and balls in ℚ_p.

mod ball;
mod number;

pub use ball::{Ball, PrincipalPart};
pub use number::{PadicNumber, DEFAULT_PRECISION};
