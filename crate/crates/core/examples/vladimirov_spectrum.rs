//! The Vladimirov operator acts on each Kozyrev wavelet by the scalar
//! p^{alpha(1-n)}; Gamma_p follows its closed form for every alpha != 0.
//!
//!     cargo run --release --example vladimirov_spectrum -- 5 0.75

use num_complex::Complex64;
use parton::wavelets::{gamma_p, gamma_p_shell_sum, vladimirov_eigencheck};

fn main() -> parton::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map(|s| s.parse().expect("prime")).unwrap_or(5);
    let alpha: f64 = args.next().map(|s| s.parse().expect("alpha")).unwrap_or(0.75);

    println!("D^{alpha} psi_n = p^(alpha(1-n)) psi_n, p = {p}");
    println!("{:>4} {:>16} {:>12}", "n", "eigenvalue", "deviation");
    for n in -3..=3 {
        let lambda = (p as f64).powf(alpha * (1 - n) as f64);
        println!("{n:>4} {lambda:>16.8} {:>12.2e}", vladimirov_eigencheck(p, n, alpha)?);
    }

    println!("\nGamma_p(-alpha) closed form against shell sums (convergent for Re alpha < 0):");
    for a in [Complex64::new(-0.5, 0.0), Complex64::new(-1.2, 0.7), Complex64::new(-0.1, -2.0)] {
        let closed = gamma_p(p, a)?;
        let shells = gamma_p_shell_sum(p, a, 400)?;
        println!("  alpha = {a:>10.3}  closed {closed:.12}  |diff| {:.2e}", (closed - shells).norm());
    }
    println!("  alpha = 0.75 (continued)  {:.12}", gamma_p(p, Complex64::new(0.75, 0.0))?.re);
    Ok(())
}
