//! Ramanujan's tau from the q-expansion of Delta, then extended
//! multiplicatively from its values at primes.
//!
//!     cargo run --release --example tau_stream -- 30

use parton::coeffs::{coefficient_bound_check, ramanujan_tau_table, CoefficientStream};

fn main() -> parton::Result<()> {
    let n_max: usize = std::env::args().nth(1).map(|s| s.parse().expect("count")).unwrap_or(24);
    let table = ramanujan_tau_table(n_max);
    let stream = CoefficientStream::tau(n_max.max(2));
    for n in 1..=n_max {
        let m = stream.coefficient_exact(n as u64)?;
        println!("tau({n:>3}) = {:>24}   {}", table[n], if m == num_bigint::BigInt::from(table[n]) { "" } else { "MISMATCH" });
    }

    let big = CoefficientStream::tau(10_000);
    println!("\ntau(10^6)  = {}", big.coefficient_exact(1_000_000)?);
    let bound = coefficient_bound_check(&big, 10_000)?;
    println!(
        "max |tau(p)| / p^(11/2) over p <= 10^4: {:.6} at p = {:?} (bound 2)",
        bound.max_ratio, bound.worst_prime
    );
    Ok(())
}
