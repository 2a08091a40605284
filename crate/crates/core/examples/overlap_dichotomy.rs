//! Partial sums of sum_m U_m(cos a) U_m(cos b) for the Hecke angles of two
//! product-Dirichlet streams: bounded when the angles differ, growing
//! linearly when they agree.
//!
//!     cargo run --release --example overlap_dichotomy

use parton::dirichlet::characters_mod;
use parton::parton::{overlap_dichotomy, OverlapClass};

fn main() {
    let chars: Vec<_> = characters_mod(7).into_iter().filter(|c| !c.is_principal()).collect();
    let windows = [10, 100, 1000, 10_000];
    for p in [2u64, 3, 5, 11, 13] {
        println!("p = {p}");
        for f in &chars {
            for g in &chars {
                if f.label() > g.label() {
                    continue;
                }
                let (Some(a), Some(b)) = (f.arg(p as i64), g.arg(p as i64)) else { continue };
                let d = overlap_dichotomy(a, b, &windows);
                let class = match d.class {
                    OverlapClass::Diagonal => "diagonal".to_string(),
                    OverlapClass::Bounded { bound } => format!("bounded by {bound:.3}"),
                    OverlapClass::Unclassified => "unclassified".to_string(),
                };
                let sums: Vec<String> = d.partial_sums.iter().map(|(m, s)| format!("{m}:{s:.2}")).collect();
                println!("  {} x {}  {class:<20} {}", f.descriptor(), g.descriptor(), sums.join("  "));
            }
        }
    }
}
