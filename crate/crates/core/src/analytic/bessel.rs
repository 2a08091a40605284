use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coeffs::convolution_coeffs;
use crate::dirichlet::DirichletCharacter;
use crate::numeric::{gamma, integrate_adaptive};
use crate::{Error, Result};

use super::lseries::{product_l, ProductMethod};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// K₀(x) = ∫_0^∞ e^{-x cosh t} dt, which is the two-sided integral
/// ½∫_0^∞ (dy/y) e^{-ay - b/y} after y = √(b/a) e^t, with x = 2√(ab).
pub fn bessel_k0(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("K0 needs x > 0, got {x}")));
    }
    // e^{-x(cosh t - 1)} < e^{-45} beyond t_max
    let t_max = (1.0 + 45.0 / x).acosh();
    let scale = (-x).exp();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let q = integrate_adaptive(|t| real((-x * (t.cosh() - 1.0)).exp()), 0.0, t_max, 0.0, 1e-14)?;
    Ok(q.value.re * scale)
}

/// Ascending series, accurate for small x.
pub fn bessel_k0_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut h = 0.0;
    let mut rest = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        h += 1.0 / kf;
        i0 += term;
        rest += term * h;
        if term < 1e-18 * i0 {
            break;
        }
    }
    -((x / 2.0).ln() + EULER_GAMMA) * i0 + rest
}

/// √(π/2x) e^{-x} Σ_{k<terms} (-1)^k Π_{j≤k}(2j-1)² / (k! (8x)^k).
pub fn bessel_k0_asymptotic(x: f64, terms: usize) -> f64 {
    let mut coef = 1.0;
    let mut sum = 1.0;
    for k in 1..terms {
        let odd = (2 * k - 1) as f64;
        coef *= -odd * odd / (k as f64 * 8.0 * x);
        sum += coef;
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() * sum
}

/// ∫_0^∞ (dy/y) e^{-ay - b/y}, directly in u = ln y over the whole line.
pub fn two_sided_exponential_integral(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain("a and b must be positive".into()));
    }
    let center = 0.5 * (b / a).ln();
    let x = 2.0 * (a * b).sqrt();
    let width = (1.0 + 50.0 / x).acosh() + 1.0;
    let f = |u: f64| real((-a * u.exp() - b * (-u).exp()).exp());
    let left = integrate_adaptive(f, center - width, center, 0.0, 1e-14)?;
    let right = integrate_adaptive(f, center, center + width, 0.0, 1e-14)?;
    Ok((left.value + right.value).re)
}

/// ∫_0^∞ y^{μ-1} K₀(c y) dy = 2^{μ-2} c^{-μ} Γ(μ/2)², Re μ > 0.
pub fn k0_mellin_closed(mu: Complex64, c: f64) -> Complex64 {
    let g = gamma(mu * 0.5);
    ((mu - 2.0) * 2f64.ln()).exp() * (-mu * c.ln()).exp() * g * g
}

/// The same transform by nested quadrature.
pub fn k0_mellin_quadrature(mu: Complex64, c: f64) -> Result<Complex64> {
    if mu.re <= 0.0 {
        return Err(Error::Domain("Re μ must be positive".into()));
    }
    let lo = (1e-3 / c).ln() - 45.0 / mu.re;
    let hi = (60.0 / c).ln();
    let f = |u: f64| -> Complex64 {
        let k = bessel_k0(c * u.exp()).unwrap_or(0.0);
        (mu * u).exp() * k
    };
    let mid = (1.0 / c).ln();
    let a = integrate_adaptive(f, lo, mid, 1e-300, 1e-12)?;
    let b = integrate_adaptive(f, mid, hi, 1e-300, 1e-12)?;
    Ok(a.value + b.value)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TermCheck {
    pub n: u64,
    pub closed: Complex64,
    pub quadrature: Complex64,
    pub relative_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BesselCheck {
    pub series: Complex64,
    pub reference: Complex64,
    pub residual: f64,
    pub terms: Vec<TermCheck>,
}

/// Evaluates L(s,ν)L(s,ν*) from its K₀ representation
/// 4(π/N)^{s+ε}/Γ((s+ε)/2)² Σ a(n) n^ε ∫ (dy/y) y^{s+ε} K₀(2πny/N)
/// and compares with the direct product; the first ten y-integrals are
/// also done by quadrature.
pub fn product_l_bessel_check(s: Complex64, nu: &DirichletCharacter, n_terms: usize) -> Result<BesselCheck> {
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("Re(s) = {} must exceed 1", s.re)));
    }
    let reference = product_l(s, nu, &ProductMethod::direct())?.value;
    let a = convolution_coeffs(nu, n_terms)?;
    let eps = nu.parity_epsilon() as f64;
    let modulus = nu.modulus() as f64;
    let mu = s + eps;
    let g = gamma(mu * 0.5);
    let prefactor = (mu * (PI / modulus).ln()).exp() * 4.0 / (g * g);
    let mut series = Complex64::new(0.0, 0.0);
    let mut terms = Vec::new();
    for n in (1..=n_terms).rev() {
        if a[n].norm() == 0.0 && n > 10 {
            continue;
        }
        let c = 2.0 * PI * n as f64 / modulus;
        let closed = k0_mellin_closed(mu, c);
        series += prefactor * a[n] * (n as f64).powf(eps) * closed;
        if n <= 10 {
            let quadrature = k0_mellin_quadrature(mu, c)?;
            let relative_error = (quadrature - closed).norm() / closed.norm();
            terms.push(TermCheck { n: n as u64, closed, quadrature, relative_error });
        }
    }
    terms.reverse();
    Ok(BesselCheck { series, reference, residual: (series - reference).norm(), terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::character;

    #[test]
    fn matches_series_and_asymptotics() {
        for x in [0.01, 0.1, 0.5, 1.0, 2.0] {
            let q = bessel_k0(x).unwrap();
            assert!((q - bessel_k0_series(x)).abs() < 1e-12 * q, "x={x}");
        }
        let q = bessel_k0(20.0).unwrap();
        assert!((q - bessel_k0_asymptotic(20.0, 1)).abs() / q < 1e-2);
        assert!((q - bessel_k0_asymptotic(20.0, 12)).abs() / q < 1e-11);
        assert!((bessel_k0(1.0).unwrap() - 0.421_024_438_240_708_3).abs() < 1e-14);
    }

    #[test]
    fn monotone() {
        let mut prev = f64::INFINITY;
        for i in 1..200 {
            let k = bessel_k0(i as f64 * 0.1).unwrap();
            assert!(k < prev);
            prev = k;
        }
        assert!(bessel_k0(0.0).is_err());
    }

    #[test]
    fn two_sided() {
        let lhs = 2.0 * bessel_k0(2.0).unwrap();
        assert!((lhs - two_sided_exponential_integral(1.0, 1.0).unwrap()).abs() < 1e-10);
        let lhs = 2.0 * bessel_k0(2.0 * 6f64.sqrt()).unwrap();
        assert!((lhs - two_sided_exponential_integral(2.0, 3.0).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn mellin_of_k0() {
        for (mu, c) in [(2.0, 1.0), (3.0, 2.5), (2.5, 0.7)] {
            let mu = Complex64::new(mu, 0.0);
            let a = k0_mellin_closed(mu, c);
            let b = k0_mellin_quadrature(mu, c).unwrap();
            assert!((a - b).norm() / a.norm() < 1e-9, "{a} {b}");
        }
        // Γ(1)² / 1 at μ = 2, c = 1
        assert!((k0_mellin_closed(Complex64::new(2.0, 0.0), 1.0).re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bessel_representation() {
        let nu = character(5, 1).unwrap();
        let s = Complex64::new(2.0, 0.0);
        let small = product_l_bessel_check(s, &nu, 2_000).unwrap();
        let big = product_l_bessel_check(s, &nu, 8_000).unwrap();
        assert!(big.residual < 1e-6);
        assert!(big.residual < small.residual);
        assert!(big.terms.iter().all(|t| t.relative_error < 1e-8));
    }
}
