//! Theta series of primitive characters, the y -> 1/(N^2 y) transformation,
//! and L-values recovered from the theta Mellin transform.
//!
//!     cargo run --release --example theta_functions -- 5 2

use num_complex::Complex64;
use parton::analytic::{
    dirichlet_l, gauss_product_residual, l_from_theta_mellin, theta_series, theta_s_transform_residual, LMethod,
};
use parton::dirichlet::character;

fn main() -> parton::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse().expect("modulus")).unwrap_or(5);
    let idx: usize = args.next().map(|s| s.parse().expect("label")).unwrap_or(2);
    let nu = character(n, idx)?;
    println!("{}: epsilon = {}, Gauss sum {:.10}", nu.descriptor(), nu.parity_epsilon(), nu.gauss_sum());
    println!("tau(nu) tau(nu*) = nu(-1) N residual {:.2e}\n", gauss_product_residual(&nu));

    for y in [0.05, 0.2, 1.0, 3.0] {
        let t = theta_series(y, &nu)?;
        println!(
            "y = {y:<5} theta = {:>30.14}  ({} terms, tail < {:.1e})  S-transform residual {:.2e}",
            t.value,
            t.terms,
            t.tail_bound,
            theta_s_transform_residual(y, &nu)?
        );
    }

    println!();
    for s in [Complex64::new(2.0, 0.0), Complex64::new(1.5, 14.0), Complex64::new(3.0, -2.5)] {
        let a = l_from_theta_mellin(s, &nu)?;
        let b = dirichlet_l(s, &nu, LMethod::DEFAULT_SERIES)?.value;
        println!("L({s}) = {a:.14}   series {b:.14}   |diff| {:.1e}", (a - b).norm());
    }
    Ok(())
}
