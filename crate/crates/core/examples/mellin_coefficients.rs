//! p-adic Mellin coefficients c_p(l, s), the unitarity sum on Re s = 1/2,
//! and recovering a wavelet from its transforms.
//!
//!     cargo run --release --example mellin_coefficients -- 3

use num_complex::Complex64;
use parton::padic::PadicNumber;
use parton::pmellin::{cp, cp_modified, cp_unitarity_closed, cp_unitarity_sum, inverse_mellin, mellin_transform};
use parton::wavelets::{kozyrev_wavelet, WaveletIndex};

fn main() -> parton::Result<()> {
    let p: u64 = std::env::args().nth(1).map(|s| s.parse().expect("prime")).unwrap_or(3);

    let s = Complex64::new(0.5, 1.7);
    println!("s = {s}");
    for ell in 0..p as u32 {
        println!("  c_{p}({ell}, s) = {:>28.12}", cp(p, ell, s)?);
    }
    let t = Complex64::new(0.0, 1.7);
    println!("  modified, l = 0, s = {t}: {:.12}", cp_modified(p, 0, t)?);
    println!("  sum_l |c_p(l, s)|^2 = {:.15}  closed form {:.15}", cp_unitarity_sum(p, s)?, cp_unitarity_closed(p, s));

    let psi = kozyrev_wavelet(p, &WaveletIndex::mother(0))?;
    let transform = |ell: u32, s: Complex64| mellin_transform(&psi, s, ell);
    println!("\ninverse transform on Re s = 1:");
    for (a, b) in [(1, 1), (2, 1), (1, p as i64), (p as i64 + 1, p as i64)] {
        let x = PadicNumber::from_fraction(a, b, p, 12)?;
        let r = inverse_mellin(transform, &x, 1.0, 64)?;
        println!("  x = {a}/{b:<3} recovered {:.12}  direct {:.12}  ({} points)", r.value, psi.evaluate(&x)?, r.points);
    }
    Ok(())
}
