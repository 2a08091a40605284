//! The Bessel expansion sum_n a(n) (ny)^eps sqrt(y) K0(2 pi n y / N) e(nx/N)
//! built from the divisor convolution of a character with its conjugate,
//! and the growth of its truncated norm integral near the cusp.
//!
//!     cargo run --release --example maass_waveform -- 5 2

use parton::analytic::{halving_cutoffs, maass_norm_divergence_probe, maass_waveform, MaassExpansion};
use parton::dirichlet::character;

fn main() -> parton::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse().expect("modulus")).unwrap_or(5);
    let idx: usize = args.next().map(|s| s.parse().expect("label")).unwrap_or(2);
    let nu = character(n, idx)?;

    let e = MaassExpansion::new(1.0, &nu, 60, true)?;
    println!("{} at y = 1, tail beyond 60 terms < {:.1e}", nu.descriptor(), e.tail_bound);
    for i in 1..=8 {
        println!("  term {i:<2} {:.12}   recovered {:.12}", e.terms[i], e.fourier_coefficient(i as i64, 256));
    }
    for x in [0.0, 0.3, 1.7] {
        let w = maass_waveform(x, 0.5, &nu, 200, true)?;
        println!("W({x} + 0.5i) = {:.12}", w.value);
    }

    println!("\ntruncated norm integral over eps < y, mod 5, m = n = 1");
    let probe = maass_norm_divergence_probe(1, 1, 5, &halving_cutoffs(2, 9))?;
    for r in &probe.rows {
        let inc = r.increment.map(|v| format!("{v:>12.6}")).unwrap_or_default();
        let norm = r.normalized_increment.map(|v| format!("{v:.4}")).unwrap_or_default();
        println!("  eps = {:<12.6e} integral {:>14.6}  increment {inc:>12}  normalized {norm}", r.epsilon, r.integral);
    }
    Ok(())
}
