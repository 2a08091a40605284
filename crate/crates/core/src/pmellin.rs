//! p-adic Mellin transform with the unitary characters ω_ℓ of conductor p.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::PadicNumber;
use crate::wavelets::{Measure, SchwartzFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MellinVariant {
    /// Transforms of ψ_{n,0,1}.
    Kozyrev,
    /// Transforms of |x|^{1/2}ψ_{n,0,1}.
    Modified,
}

/// The n-independent factor of the Mellin transform of a mother wavelet.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MellinCoefficient {
    pub prime: u64,
    pub ell: u32,
    pub s: Complex64,
    pub value: Complex64,
    pub variant: MellinVariant,
}

/// ω_ℓ(x) = e^{2πiℓd/p} for x with leading digit d.
pub fn omega(p: u64, ell: u32, leading_digit: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * ell as f64 * leading_digit as f64 / p as f64)
}

fn p_pow(p: u64, s: Complex64) -> Complex64 {
    (s * (p as f64).ln()).exp()
}

/// Rejects s within 1e-8 of a solution of p^s = 1.
pub fn check_pole(p: u64, s: Complex64) -> Result<()> {
    let period = 2.0 * PI / (p as f64).ln();
    let k = (s.im / period).round();
    let d = Complex64::new(s.re, s.im - k * period);
    if d.norm() < 1e-8 {
        return Err(Error::Pole(format!("p^s = 1 at s = {s}")));
    }
    Ok(())
}

/// c_p(ℓ, s) = -1/(p(1 - p^{-s})) + δ_{ℓ,0}/(p^s - 1) + δ_{ℓ,p-1}.
pub fn cp(p: u64, ell: u32, s: Complex64) -> Result<Complex64> {
    check_pole(p, s)?;
    let ps = p_pow(p, s);
    let mut v = -1.0 / (p as f64 * (1.0 - ps.inv()));
    if ell == 0 {
        v += 1.0 / (ps - 1.0);
    }
    if ell as u64 == p - 1 {
        v += 1.0;
    }
    Ok(v)
}

/// 𝐜_p(ℓ, s) = c_p(ℓ, s + 1/2).
pub fn cp_modified(p: u64, ell: u32, s: Complex64) -> Result<Complex64> {
    cp(p, ell, s + 0.5)
}

pub fn mellin_coefficient(p: u64, ell: u32, s: Complex64, variant: MellinVariant) -> Result<MellinCoefficient> {
    let value = match variant {
        MellinVariant::Kozyrev => cp(p, ell, s)?,
        MellinVariant::Modified => cp_modified(p, ell, s)?,
    };
    Ok(MellinCoefficient { prime: p, ell, s, value, variant })
}

/// ∫ f(x) ω_ℓ(x) |x|^s d×x as an exact ball sum.
pub fn mellin_transform(f: &SchwartzFunction, s: Complex64, ell: u32) -> Result<Complex64> {
    f.integrate_weighted(Measure::Multiplicative, s, Some(ell))
}

/// c_p(ℓ,s)p^{n(s-1/2)} for ψ_{n,0,1}, or 𝐜_p(ℓ,s)p^{ns} for the modified wavelet.
pub fn wavelet_mellin_closed_form(p: u64, n: i32, s: Complex64, ell: u32, variant: MellinVariant) -> Result<Complex64> {
    Ok(match variant {
        MellinVariant::Kozyrev => cp(p, ell, s)? * p_pow(p, (s - 0.5) * n as f64),
        MellinVariant::Modified => cp_modified(p, ell, s)? * p_pow(p, s * n as f64),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InverseMellin {
    pub value: Complex64,
    pub points: usize,
    pub last_change: f64,
}

/// Recovers f(x) from its transforms g̃_ℓ(s) on the line Re s = σ:
/// f(x) = Σ_ℓ conj(ω_ℓ(x)) (ln p / 2π) ∫_0^{2π/ln p} |x|^{-s} g̃_ℓ(s) dt.
///
/// Trapezoid rule in t, doubling from `points` until two successive
/// values differ by less than 1e-10.
pub fn inverse_mellin<F>(transform: F, x: &PadicNumber, sigma: f64, points: usize) -> Result<InverseMellin>
where
    F: Fn(u32, Complex64) -> Result<Complex64>,
{
    let p = x.prime();
    let v = x.valuation().ok_or_else(|| Error::Domain("inverse Mellin transform at x = 0".into()))?;
    let d = x.leading_digit().unwrap();
    let lp = (p as f64).ln();
    let period = 2.0 * PI / lp;
    let k = -(v as f64);
    let eval = |n: usize| -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for ell in 0..p as u32 {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..n {
                let s = Complex64::new(sigma, period * i as f64 / n as f64);
                acc += (-s * (k * lp)).exp() * transform(ell, s)?;
            }
            total += omega(p, ell, d).conj() * acc / n as f64;
        }
        Ok(total)
    };
    let mut n = points.max(4);
    let mut prev = eval(n)?;
    loop {
        n *= 2;
        let next = eval(n)?;
        let change = (next - prev).norm();
        if change < 1e-10 {
            return Ok(InverseMellin { value: next, points: n, last_change: change });
        }
        if n >= 1 << 16 {
            return Err(Error::Quadrature(format!("inverse Mellin change {change:e} at {n} points")));
        }
        prev = next;
    }
}

/// Σ_ℓ |𝐜_p(ℓ, s)|², summed case by case.
pub fn cp_unitarity_sum(p: u64, s: Complex64) -> Result<f64> {
    let mut total = 0.0;
    for ell in 0..p as u32 {
        total += cp_modified(p, ell, s)?.norm_sqr();
    }
    Ok(total)
}

/// 1 + (1 - |p^s|²)/|p^{s+1/2} - 1|², equal to 1 on Re s = 0.
pub fn cp_unitarity_closed(p: u64, s: Complex64) -> f64 {
    let ps = p_pow(p, s);
    1.0 + (1.0 - ps.norm_sqr()) / (p_pow(p, s + 0.5) - 1.0).norm_sqr()
}
