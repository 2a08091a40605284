use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dirichlet::DirichletCharacter;
use crate::numeric::{gamma, integrate_adaptive};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaValue {
    pub value: Complex64,
    pub tail_bound: f64,
    pub terms: u64,
}

/// θ(y, ν) = 2 Σ_{n≥1} ν(n) n^ε e^{-πn²y/N}; the modulus-1 case adds the
/// n = 0 term and is the classical Jacobi theta.
pub fn theta_series(y: f64, nu: &DirichletCharacter) -> Result<ThetaValue> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("y = {y} must be positive")));
    }
    if !nu.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let modulus = nu.modulus() as f64;
    let eps = nu.parity_epsilon() as i32;
    let rate = PI * y / modulus;
    let mut sum = if nu.modulus() == 1 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
    let mut n = 0u64;
    loop {
        n += 1;
        let nf = n as f64;
        sum += nu.value(n as i64) * (2.0 * nf.powi(eps) * (-rate * nf * nf).exp());
        // geometric majorant of Σ_{m>n} 2 m^ε e^{-π m² y/N}
        let next = (n + 1) as f64;
        let lead = 2.0 * next.powi(eps) * (-rate * next * next).exp();
        let ratio = (-rate * (2.0 * next + 1.0)).exp() * ((next + 1.0) / next).powi(eps);
        if ratio < 1.0 {
            let bound = lead / (1.0 - ratio);
            if bound < 1e-17 * sum.norm().max(1.0) {
                return Ok(ThetaValue { value: sum, tail_bound: bound, terms: n });
            }
        }
    }
}

/// Leading factor y^{1/2+ε} τ(ν) / (i^ε √N) of the S-transform.
fn s_factor(y: f64, nu: &DirichletCharacter) -> Complex64 {
    let eps = nu.parity_epsilon();
    let i_eps = if eps == 1 { Complex64::new(0.0, 1.0) } else { Complex64::new(1.0, 0.0) };
    nu.gauss_sum() * y.powf(0.5 + eps as f64) / (i_eps * (nu.modulus() as f64).sqrt())
}

/// |θ(1/y, ν) - y^{1/2+ε} τ(ν) θ(y, ν*) / (i^ε √N)|.
pub fn theta_s_transform_residual(y: f64, nu: &DirichletCharacter) -> Result<f64> {
    let lhs = theta_series(1.0 / y, nu)?.value;
    let rhs = s_factor(y, nu) * theta_series(y, &nu.conjugate())?.value;
    Ok((lhs - rhs).norm())
}

/// |τ(ν) τ(ν*) - ν(-1) N|.
pub fn gauss_product_residual(nu: &DirichletCharacter) -> f64 {
    let lhs = nu.gauss_sum() * nu.conjugate().gauss_sum();
    (lhs - nu.value(-1) * nu.modulus() as f64).norm()
}

/// L(s, ν) from the Mellin transform of θ, split at y = 1 with the
/// S-transform folding (0, 1) onto (1, ∞).
pub fn l_from_theta_mellin(s: Complex64, nu: &DirichletCharacter) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("Re(s) = {} must exceed 1", s.re)));
    }
    if nu.modulus() == 1 {
        return Err(Error::Unsupported("the modulus-1 theta has a constant term".into()));
    }
    let eps = nu.parity_epsilon() as f64;
    let modulus = nu.modulus() as f64;
    let a = (s + eps) * 0.5;
    let conj = nu.conjugate();
    // θ(y) < 1e-30 beyond this point for y ≥ 1
    let upper = modulus * (75.0 + 2.0 * a.norm()) / PI;
    let c = s_factor(1.0, nu);
    let integrand = |y: f64| -> Complex64 {
        let lny = y.ln();
        let t1 = theta_series(y, nu).map(|t| t.value).unwrap_or_default();
        let t2 = theta_series(y, &conj).map(|t| t.value).unwrap_or_default();
        t1 * ((a - 1.0) * lny).exp() + c * t2 * ((-a - 0.5 + eps) * lny).exp()
    };
    let q = integrate_adaptive(integrand, 1.0, upper, 1e-15, 1e-13)?;
    Ok((a * (PI / modulus).ln()).exp() / (gamma(a) * 2.0) * q.value)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvolutionCheck {
    pub y: f64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

/// ∫_0^∞ (dy'/y') θ(Y/y', ν) θ(Y y', ν*) by quadrature in log y'.
pub fn theta_convolution(big_y: f64, nu: &DirichletCharacter) -> Result<Complex64> {
    let modulus = nu.modulus() as f64;
    let conj = nu.conjugate();
    let cut = 80.0 * modulus / PI;
    let lo = (big_y / cut).ln();
    let hi = (cut / big_y).ln();
    let integrand = |u: f64| -> Complex64 {
        let t = u.exp();
        let a = theta_series(big_y / t, nu).map(|v| v.value).unwrap_or_default();
        let b = theta_series(big_y * t, &conj).map(|v| v.value).unwrap_or_default();
        a * b
    };
    Ok(integrate_adaptive(integrand, lo, hi, 1e-14, 1e-11)?.value)
}

/// Conv(1/Y) against Y^{1+2ε} Conv(Y), relative residual.
pub fn theta_convolution_weight_check(big_y: f64, nu: &DirichletCharacter) -> Result<ConvolutionCheck> {
    if !nu.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let eps = nu.parity_epsilon() as f64;
    let lhs = theta_convolution(1.0 / big_y, nu)?;
    let rhs = theta_convolution(big_y, nu)? * big_y.powf(1.0 + 2.0 * eps);
    let residual = (lhs - rhs).norm() / lhs.norm().max(1e-300);
    Ok(ConvolutionCheck { y: big_y, lhs, rhs, residual })
}
