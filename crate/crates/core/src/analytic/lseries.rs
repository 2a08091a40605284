use num_complex::Complex64;

use crate::arith::{gcd, primes_below};
use crate::coeffs::{chebyshev_u, convolution_coeffs};
use crate::dirichlet::DirichletCharacter;
use crate::wavelets::{Measure, SchwartzFunction};
use crate::{Error, Result};

/// A truncated evaluation together with an estimate of what was dropped.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LValue {
    pub value: Complex64,
    pub tail_estimate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LMethod {
    /// Σ_{n ≤ terms} ν(n) n^{-s} plus an Euler–Maclaurin tail per residue class.
    DirectSeries { terms: usize },
    /// Π_{p < prime_bound} (1 - ν(p) p^{-s})^{-1}.
    EulerProduct { prime_bound: usize },
}

impl LMethod {
    pub const DEFAULT_SERIES: LMethod = LMethod::DirectSeries { terms: 1_000_000 };
    pub const DEFAULT_EULER: LMethod = LMethod::EulerProduct { prime_bound: 1_000_000 };
}

fn check_abscissa(s: Complex64) -> Result<()> {
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("Re(s) = {} must exceed 1", s.re)));
    }
    Ok(())
}

fn npow(n: f64, s: Complex64) -> Complex64 {
    (-s * n.ln()).exp()
}

/// L(s, ν) = Σ ν(n) n^{-s} for Re s > 1.
pub fn dirichlet_l(s: Complex64, nu: &DirichletCharacter, method: LMethod) -> Result<LValue> {
    check_abscissa(s)?;
    match method {
        LMethod::DirectSeries { terms } => Ok(direct_series(s, nu, terms)),
        LMethod::EulerProduct { prime_bound } => Ok(euler_product(s, nu, prime_bound)),
    }
}

fn direct_series(s: Complex64, nu: &DirichletCharacter, terms: usize) -> LValue {
    let q = nu.modulus();
    let values: Vec<Complex64> = (0..q).map(|a| nu.value(a as i64)).collect();
    let mut sum = Complex64::new(0.0, 0.0);
    // summing small terms first keeps rounding down
    for n in (1..=terms).rev() {
        let v = values[n % q as usize];
        if v.re != 0.0 || v.im != 0.0 {
            sum += v * npow(n as f64, s);
        }
    }
    // Σ_{j ≥ 0} f(j), f(x) = (n0 + q x)^{-s}
    let qf = q as f64;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut estimate = 0.0;
    for a in 0..q {
        let v = values[a as usize];
        if v.norm() == 0.0 {
            continue;
        }
        let over = (terms as u64 + 1).max(1);
        let n0 = over + (a + q - over % q) % q;
        let n0f = n0 as f64;
        let f0 = npow(n0f, s);
        let integral = f0 * n0f / (qf * (s - 1.0));
        let d1 = s * qf * f0 / n0f / 12.0;
        let d3 = s * (s + 1.0) * (s + 2.0) * qf.powi(3) * f0 / n0f.powi(3) / 720.0;
        tail += v * (integral + f0 * 0.5 + d1 - d3);
        let d5 = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * qf.powi(5) * f0 / n0f.powi(5) / 30240.0;
        estimate += d5.norm();
    }
    LValue { value: sum + tail, tail_estimate: estimate }
}

fn euler_product(s: Complex64, nu: &DirichletCharacter, prime_bound: usize) -> LValue {
    let mut log = Complex64::new(0.0, 0.0);
    for p in primes_below(prime_bound) {
        let v = nu.value(p as i64);
        if v.norm() == 0.0 {
            continue;
        }
        log -= (Complex64::new(1.0, 0.0) - v * npow(p as f64, s)).ln();
    }
    LValue { value: log.exp(), tail_estimate: prime_tail(s.re, prime_bound as f64) }
}

/// Σ_{p ≥ B} p^{-σ} ≈ B^{1-σ}/((σ-1) ln B).
fn prime_tail(sigma: f64, bound: f64) -> f64 {
    let b = bound.max(2.0);
    b.powf(1.0 - sigma) / ((sigma - 1.0) * b.ln())
}

/// Local factor (1 - ν(p) p^{-s})^{-1}.
pub fn dirichlet_local_factor(s: Complex64, nu: &DirichletCharacter, p: u64) -> Complex64 {
    (Complex64::new(1.0, 0.0) - nu.value(p as i64) * npow(p as f64, s)).inv()
}

/// Riemann ζ(s) by direct summation with Euler–Maclaurin tail; Re s > 1.
pub fn riemann_zeta(s: Complex64, terms: usize) -> Result<LValue> {
    let trivial = crate::dirichlet::character(1, 0)?;
    dirichlet_l(s, &trivial, LMethod::DirectSeries { terms })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProductMethod {
    /// L(s, ν) · L(s, ν*), each by direct series.
    DirectProduct { terms: usize },
    /// Σ a(n) n^{-s} with a(n) = Σ_{d|n} ν(d) ν*(n/d).
    Convolution { terms: usize },
    /// Π_p of the Chebyshev local factors.
    ChebyshevEuler { prime_bound: usize },
    /// L(s, ν) · L(s, ν₂*) for a second character of the same modulus.
    TwoCharacter { other: DirichletCharacter, terms: usize },
}

impl ProductMethod {
    pub fn direct() -> Self {
        ProductMethod::DirectProduct { terms: 1_000_000 }
    }
    pub fn convolution() -> Self {
        ProductMethod::Convolution { terms: 200_000 }
    }
    pub fn chebyshev() -> Self {
        ProductMethod::ChebyshevEuler { prime_bound: 1_000_000 }
    }
}

/// L(s, ν) L(s, ν*) for nonprincipal ν and Re s > 1.
pub fn product_l(s: Complex64, nu: &DirichletCharacter, method: &ProductMethod) -> Result<LValue> {
    check_abscissa(s)?;
    if nu.is_principal() {
        return Err(Error::PrincipalCharacter);
    }
    match method {
        ProductMethod::DirectProduct { terms } => {
            let a = direct_series(s, nu, *terms);
            let b = direct_series(s, &nu.conjugate(), *terms);
            Ok(LValue {
                value: a.value * b.value,
                tail_estimate: a.tail_estimate * b.value.norm() + b.tail_estimate * a.value.norm(),
            })
        }
        ProductMethod::Convolution { terms } => {
            let a = convolution_coeffs(nu, *terms)?;
            let mut sum = Complex64::new(0.0, 0.0);
            for n in (1..=*terms).rev() {
                if a[n].norm() != 0.0 {
                    sum += a[n] * npow(n as f64, s);
                }
            }
            // partial sums of a(n) are O(√x) since the product has no pole at 1
            let est = (*terms as f64).powf(0.5 - s.re) / (s.re - 0.5);
            Ok(LValue { value: sum, tail_estimate: est })
        }
        ProductMethod::ChebyshevEuler { prime_bound } => {
            let mut log = Complex64::new(0.0, 0.0);
            for p in primes_below(*prime_bound) {
                if gcd(p, nu.modulus()) > 1 {
                    continue;
                }
                log -= chebyshev_local_factor(s, nu, p)?.inv().ln();
            }
            Ok(LValue { value: log.exp(), tail_estimate: 2.0 * prime_tail(s.re, *prime_bound as f64) })
        }
        ProductMethod::TwoCharacter { other, terms } => {
            if other.modulus() != nu.modulus() {
                return Err(Error::Domain("characters of different moduli".into()));
            }
            let a = direct_series(s, nu, *terms);
            let b = direct_series(s, &other.conjugate(), *terms);
            Ok(LValue {
                value: a.value * b.value,
                tail_estimate: a.tail_estimate * b.value.norm() + b.tail_estimate * a.value.norm(),
            })
        }
    }
}

/// 1/(1 - 2cos(arg ν(p)) p^{-s} + p^{-2s}) for p ∤ N.
pub fn chebyshev_local_factor(s: Complex64, nu: &DirichletCharacter, p: u64) -> Result<Complex64> {
    let theta = nu
        .arg(p as i64)
        .ok_or_else(|| Error::Domain(format!("{p} divides the modulus {}", nu.modulus())))?;
    let t = npow(p as f64, s);
    Ok((Complex64::new(1.0, 0.0) - t * (2.0 * theta.cos()) + t * t).inv())
}

/// Σ_{m < terms} U_m(cos arg ν(p)) p^{-sm}.
pub fn chebyshev_local_series(s: Complex64, nu: &DirichletCharacter, p: u64, terms: u32) -> Result<Complex64> {
    let theta = nu
        .arg(p as i64)
        .ok_or_else(|| Error::Domain(format!("{p} divides the modulus {}", nu.modulus())))?;
    let t = npow(p as f64, s);
    let mut pow = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 0..terms {
        sum += pow * chebyshev_u(m, theta.cos());
        pow *= t;
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalZetaCheck {
    pub additive: Complex64,
    pub multiplicative: Complex64,
    pub expected: Complex64,
    pub residual: f64,
}

/// ζ_p(s) = 1/(1 - p^{-s}) against (p/(p-1))∫_{ℤ_p}|x|^{s-1}dx and
/// (p/(p-1))∫_{ℤ_p} |x|^s d^×x, both integrated exactly over balls.
pub fn zeta_p_integral_check(p: u64, s: Complex64) -> Result<LocalZetaCheck> {
    if s.re <= 0.0 {
        return Err(Error::Domain(format!("Re(s) = {} must be positive", s.re)));
    }
    let zp = SchwartzFunction::origin_indicator(p, 0);
    let scale = p as f64 / (p as f64 - 1.0);
    let additive = zp.integrate_weighted(Measure::Additive, s - 1.0, None)? * scale;
    let multiplicative = zp.integrate_weighted(Measure::Multiplicative, s, None)? * scale;
    let expected = (Complex64::new(1.0, 0.0) - npow(p as f64, s)).inv();
    let residual = (additive - expected).norm().max((multiplicative - expected).norm());
    Ok(LocalZetaCheck { additive, multiplicative, expected, residual })
}
