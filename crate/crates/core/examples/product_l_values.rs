//! L(s, nu) L(s, nu*) four ways: direct product, divisor convolution,
//! Chebyshev local factors, and the K0 Bessel series.
//!
//!     cargo run --release --example product_l_values -- 5 1

use num_complex::Complex64;
use parton::analytic::{dirichlet_l, product_l, product_l_bessel_check, LMethod, ProductMethod};
use parton::dirichlet::character;

fn main() -> parton::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse().expect("modulus")).unwrap_or(5);
    let idx: usize = args.next().map(|s| s.parse().expect("label")).unwrap_or(1);
    let nu = character(n, idx)?;

    for s in [2.0, 2.5, 3.0] {
        let z = Complex64::new(s, 0.0);
        let l = dirichlet_l(z, &nu, LMethod::DEFAULT_SERIES)?.value;
        let e = dirichlet_l(z, &nu, LMethod::DEFAULT_EULER)?.value;
        println!("s = {s}   L(s, {}) = {l:.12}   Euler product {e:.12}", nu.descriptor());
        for (name, m) in [
            ("direct", ProductMethod::direct()),
            ("convolution", ProductMethod::convolution()),
            ("chebyshev", ProductMethod::chebyshev()),
        ] {
            let v = product_l(z, &nu, &m)?;
            println!("    {name:<12} {:.14}   tail {:.1e}", v.value, v.tail_estimate);
        }
    }

    let b = product_l_bessel_check(Complex64::new(2.0, 0.0), &nu, 4000)?;
    println!("\nK0 series at s = 2: {:.12} against {:.12}, residual {:.2e}", b.series, b.reference, b.residual);
    Ok(())
}
