use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coeffs::CoefficientStream;
use crate::error::{Error, Result};
use crate::parton::inner::{inner_product_i, inner_product_ii};
use crate::parton::state::{decompose, PartonState};
use crate::pmellin::{cp, cp_modified};

fn p_pow(p: u64, s: Complex64) -> Complex64 {
    (s * (p as f64).ln()).exp()
}

/// Mellin transform of the assembled state: c_p(ℓ,s) Σ c_m p^{(1-m)(s-1/2)},
/// or 𝐜_p(ℓ,s) Σ c_m p^{(1-m)s} for a rescaled state.
pub fn parton_mellin(state: &PartonState, s: Complex64, ell: u32) -> Result<Complex64> {
    let p = state.prime;
    let (prefactor, step) = if state.rescaled { (cp_modified(p, ell, s)?, s) } else { (cp(p, ell, s)?, s - 0.5) };
    let sum: Complex64 = state
        .coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| c * p_pow(p, step * (1.0 - m as f64)))
        .sum();
    Ok(prefactor * sum)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerMellinCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

/// Π_{p∈S} 𝓜[f_(p)](s) against Π c_p(ℓ_p,s)p^{s-1/2} · Π L_p(s - 1/2), with
/// L_p(w) = (1 - a(p)p^{-w} + χ(p)p^{k-1-2w})^{-1}.
pub fn finite_euler_mellin_check(
    stream: &CoefficientStream,
    primes: &[(u64, u32)],
    s: Complex64,
    truncation: usize,
) -> Result<EulerMellinCheck> {
    let k = stream.weight() as f64;
    let w = s - 0.5;
    let mut lhs = Complex64::new(1.0, 0.0);
    let mut rhs = Complex64::new(1.0, 0.0);
    for &(p, ell) in primes {
        let state = decompose(stream, p, truncation, false)?;
        lhs *= parton_mellin(&state, s, ell)?;
        let local = 1.0 - stream.seed(p)? * p_pow(p, -w) + stream.chi(p) * p_pow(p, Complex64::new(k - 1.0, 0.0) - 2.0 * w);
        rhs *= cp(p, ell, s)? * p_pow(p, w) / local;
    }
    Ok(EulerMellinCheck { lhs, rhs, residual: (lhs - rhs).norm() })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsevalReport {
    /// Σ_ℓ (ln p/2π)∫ conj(𝓜_ℓ f)𝓜_ℓ g dt over one period.
    pub lhs: Complex64,
    /// The coefficient-space pairing.
    pub rhs: Complex64,
    pub residual: f64,
    pub points: usize,
}

/// Parseval identity on the line Re s = σ, with σ = (k-1)/2 for
/// un-rescaled states and σ = 0 for rescaled ones.
pub fn parseval_check(f: &PartonState, g: &PartonState, points: usize) -> Result<ParsevalReport> {
    f.compatible(g)?;
    let p = f.prime;
    let (sigma, rhs) = if f.rescaled {
        (0.0, inner_product_ii(f, g)?.value)
    } else {
        let k = f.weight as f64;
        ((k - 1.0) / 2.0, inner_product_i(f, g, k)?)
    };
    let period = 2.0 * PI / (p as f64).ln();
    let eval = |n: usize| -> Result<Complex64> {
        let total: Result<Vec<Complex64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let s = Complex64::new(sigma, period * i as f64 / n as f64);
                let mut acc = Complex64::new(0.0, 0.0);
                for ell in 0..p as u32 {
                    acc += parton_mellin(f, s, ell)?.conj() * parton_mellin(g, s, ell)?;
                }
                Ok(acc)
            })
            .collect();
        Ok(total?.into_iter().sum::<Complex64>() / n as f64)
    };
    let mut n = points.max(2 * f.truncation + 2);
    let mut prev = eval(n)?;
    loop {
        n *= 2;
        let next = eval(n)?;
        let change = (next - prev).norm();
        if change <= 1e-10 * next.norm().max(1.0) {
            return Ok(ParsevalReport { lhs: next, rhs, residual: (next - rhs).norm(), points: n });
        }
        if n > 1 << 18 {
            return Err(Error::Quadrature(format!("Parseval quadrature change {change:e} at {n} points")));
        }
        prev = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::characters_mod;
    use crate::pmellin::mellin_transform;

    #[test]
    fn trivial_state_mellin() {
        let g = PartonState::ground(3, 5, 12, false);
        let s = Complex64::new(1.7, 0.2);
        let v = parton_mellin(&g, s, 2).unwrap();
        assert!((v - cp(3, 2, s).unwrap() * p_pow(3, s - 0.5)).norm() < 1e-14);
    }

    #[test]
    fn state_mellin_matches_ball_sum() {
        let st = decompose(&CoefficientStream::tau(50), 2, 8, false).unwrap();
        let f = st.to_schwartz().unwrap();
        let s = Complex64::new(9.0, 0.4);
        for ell in 0..2 {
            let a = parton_mellin(&st, s, ell).unwrap();
            let b = mellin_transform(&f, s, ell).unwrap();
            assert!((a - b).norm() < 1e-10 * a.norm());
        }
        let nu = &characters_mod(7)[2];
        let st = decompose(&CoefficientStream::product_dirichlet(nu, 50).unwrap(), 3, 12, true).unwrap();
        let f = st.to_schwartz().unwrap();
        let s = Complex64::new(0.0, 1.3);
        for ell in 0..3 {
            let a = parton_mellin(&st, s, ell).unwrap();
            let b = mellin_transform(&f, s, ell).unwrap();
            assert!((a - b).norm() < 1e-10 * a.norm().max(1.0));
        }
    }

    #[test]
    fn euler_checks() {
        let tau = CoefficientStream::tau(50);
        let r = finite_euler_mellin_check(&tau, &[(2, 1), (3, 0)], Complex64::new(8.0, 0.0), 60).unwrap();
        assert!(r.residual < 1e-9 * r.rhs.norm().max(1.0), "{r:?}");
        let nu = &characters_mod(5)[1];
        let d = CoefficientStream::product_dirichlet(nu, 50).unwrap();
        let r = finite_euler_mellin_check(&d, &[(2, 0), (3, 1), (7, 6)], Complex64::new(3.0, 0.0), 60).unwrap();
        assert!(r.residual < 1e-9, "{r:?}");
    }

    #[test]
    fn parseval_both_variants() {
        let tau = CoefficientStream::tau(50);
        let f = decompose(&tau, 2, 10, true).unwrap();
        let r = parseval_check(&f, &f, 32).unwrap();
        assert!(r.residual < 1e-8 * r.rhs.norm().max(1.0), "{r:?}");
        let f = decompose(&tau, 2, 10, false).unwrap();
        let r = parseval_check(&f, &f, 32).unwrap();
        assert!(r.residual < 1e-8 * r.rhs.norm(), "{r:?}");
    }
}
