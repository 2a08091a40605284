//! (1/2T) int_{-T}^{T} conj(L_f) L_g on the critical line for pairs of
//! product-Dirichlet L-functions, with a doubling trend in T.
//!
//!     cargo run --release --example time_average -- 40

use parton::analytic::{time_average_inner_product, time_average_trend};
use parton::dirichlet::characters_mod;

fn main() -> parton::Result<()> {
    let t_max: f64 = std::env::args().nth(1).map(|s| s.parse().expect("T")).unwrap_or(30.0);
    let chars: Vec<_> = characters_mod(5).into_iter().filter(|c| !c.is_principal()).collect();
    for f in &chars {
        for g in &chars {
            let r = time_average_inner_product(f, g, t_max, (t_max * 80.0) as usize, 60)?;
            println!(
                "{} x {}  T = {t_max}: {:.8}   odd-part residual {:.1e}",
                f.descriptor(),
                g.descriptor(),
                r.value,
                r.odd_part_residual
            );
        }
    }
    println!("\ntrend for {} x itself:", chars[0].descriptor());
    for row in time_average_trend(&chars[0], &chars[0], 10.0, 3, 40.0, 60)? {
        println!("  T = {:<6} {:.8}", row.t_max, row.value);
    }
    Ok(())
}
