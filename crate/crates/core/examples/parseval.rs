//! Parseval for rescaled local states: the d*x pairing equals the mean of
//! the Mellin transforms over one period of the line Re s = 0.
//!
//!     cargo run --release --example parseval -- 3

use parton::coeffs::CoefficientStream;
use parton::dirichlet::characters_mod;
use parton::parton::{decompose, parseval_check};

fn main() -> parton::Result<()> {
    let p: u64 = std::env::args().nth(1).map(|s| s.parse().expect("prime")).unwrap_or(3);

    let tau = CoefficientStream::tau(1000);
    let f = decompose(&tau, p, 12, false)?;
    let r = parseval_check(&f, &f, 64)?;
    println!("tau, p = {p}, Re s = 11/2:  transform side {:.10e}  coefficients {:.10e}  relative residual {:.2e}", r.lhs.re, r.rhs.re, r.residual / r.rhs.norm());

    for nu in characters_mod(7).into_iter().filter(|c| !c.is_principal()) {
        let s = CoefficientStream::product_dirichlet(&nu, 1000)?;
        let g = decompose(&s, p, 12, true)?;
        let r = parseval_check(&g, &g, 64)?;
        println!(
            "{:<5} p = {p}, Re s = 0:  transform side {:.12}  coefficients {:.12}  ({} points)",
            nu.descriptor(),
            r.lhs.re,
            r.rhs.re,
            r.points
        );
    }
    Ok(())
}
