//! Gram matrices of Kozyrev and modified wavelets on a window of scales,
//! computed as exact ball sums.
//!
//!     cargo run --release --example wavelet_basis -- 3

use num_complex::Complex64;
use parton::padic::PadicNumber;
use parton::wavelets::{gram_deviation, kozyrev_wavelet, modified_wavelet, wavelet_window, Measure, SchwartzFunction, WaveletIndex};

fn main() -> parton::Result<()> {
    let p: u64 = std::env::args().nth(1).map(|s| s.parse().expect("prime")).unwrap_or(3);

    let psi = kozyrev_wavelet(p, &WaveletIndex::mother(0))?;
    println!("psi_(0,0,1) on a few points of Q_{p}:");
    for (a, b) in [(0, 1), (1, 1), (2, 1), (1, p as i64), (1, (p * p) as i64)] {
        let x = PadicNumber::from_fraction(a, b, p, 12)?;
        println!("  x = {a}/{b:<4} psi(x) = {:.6}", psi.evaluate(&x)?);
    }

    let window = wavelet_window(p, -2..=2, 1);
    println!("\n{} wavelets with n in -2..=2", window.len());
    println!("  max |<psi_a, psi_b> - delta_ab|  (dx)   = {:.3e}", gram_deviation(p, &window, false)?);
    println!("  max |<phi_a, phi_b> - delta_ab|  (d*x)  = {:.3e}", gram_deviation(p, &window, true)?);

    let phi = modified_wavelet(p, &WaveletIndex::mother(1))?;
    let norm = SchwartzFunction::inner_product(&phi, &phi, Measure::Multiplicative)?;
    println!("\n<phi_1, phi_1> = {:.15}", norm);
    assert!((norm - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    Ok(())
}
