//! Dirichlet characters modulo N: value tables, parity, conductors and
//! Gauss sums.
//!
//!     cargo run --example dirichlet_characters -- 12

use parton::dirichlet::characters_mod;

fn main() {
    let n: u64 = std::env::args().nth(1).map(|s| s.parse().expect("modulus")).unwrap_or(5);
    for nu in characters_mod(n) {
        let parity = if nu.parity_epsilon() == 0 { "even" } else { "odd" };
        println!(
            "{:<6} order {:<2} {parity:<4} conductor {:<3} primitive {:<5} |tau| = {:.6}",
            nu.descriptor(),
            nu.order(),
            nu.conductor(),
            nu.is_primitive(),
            nu.gauss_sum().norm()
        );
        let row: Vec<String> = (0..n as i64).map(|a| format!("{:.3}", nu.value(a))).collect();
        println!("       {}", row.join("  "));
    }
}
