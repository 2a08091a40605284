//! Local states of the tau stream at one prime: the Hecke operator acts
//! diagonally, the ladder operators shift scale, and the states multiply
//! back into tau(n).
//!
//!     cargo run --release --example hecke_states -- 2 8

use std::collections::BTreeMap;

use parton::coeffs::CoefficientStream;
use parton::parton::{
    adjoint_check_ii, decompose, hecke_apply, ladder, reconstruct_exact, decompose_exact, Direction, HeckeVariant,
};

fn main() -> parton::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map(|s| s.parse().expect("prime")).unwrap_or(2);
    let m: usize = args.next().map(|s| s.parse().expect("truncation")).unwrap_or(8);
    let tau = CoefficientStream::tau(1000);

    let st = decompose(&tau, p, m, false)?;
    println!("state at p = {p}: a(p^m), m = 0..={m}");
    for (i, c) in st.coeffs.iter().enumerate() {
        println!("  m = {i:<2} {:>26.0}", c.re);
    }
    let t1 = hecke_apply(&st, HeckeVariant::I)?;
    println!("T_p (variant I): eigenvalue {:.0}, residual {:.2e}", t1.eigenvalue.re, t1.residual);

    let rs = decompose(&tau, p, m, true)?;
    let t2 = hecke_apply(&rs, HeckeVariant::II)?;
    println!("T_p (variant II, rescaled): eigenvalue {:.12}, residual {:.2e}", t2.eigenvalue.re, t2.residual);

    let raised = ladder(&rs, Direction::Raise);
    println!("raise drops {:.6} past m = {m}", raised.lost_tail.re);
    let adj = adjoint_check_ii(&rs, &raised.state)?;
    println!("<a+ f, g> vs <f, a- g>: {:.12} / {:.12}, residual {:.2e}", adj.lhs.re, adj.rhs.re, adj.residual);

    let mut states = BTreeMap::new();
    for q in [2u64, 3, 5, 7, 11, 13] {
        states.insert(q, decompose_exact(&tau, q, 6)?);
    }
    println!("\nreassembled from local states:");
    for n in [12u64, 360, 1001, 2310, 5040] {
        println!("  tau({n}) = {}", reconstruct_exact(&states, n)?);
    }
    Ok(())
}
