use num_complex::Complex64;

use crate::arith::{factorize, gcd};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};

/// U_n(ξ) by U_0 = 1, U_1 = 2ξ, U_{n+1} = 2ξU_n - U_{n-1}.
pub fn chebyshev_u(n: u32, xi: f64) -> f64 {
    let (mut a, mut b) = (1.0, 2.0 * xi);
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = 2.0 * xi * b - a;
        a = b;
        b = c;
    }
    b
}

/// sin((n+1)θ)/sin θ, with the limits at θ ∈ πℤ.
pub fn chebyshev_u_trig(n: u32, theta: f64) -> f64 {
    let s = theta.sin();
    if s.abs() < 1e-300 {
        let sign = if theta.cos() > 0.0 || n % 2 == 0 { 1.0 } else { -1.0 };
        return sign * (n + 1) as f64;
    }
    ((n + 1) as f64 * theta).sin() / s
}

/// a(0..=n_max) with a(n) = Σ_{d|n} ν(d) ν*(n/d), by direct divisor sums.
pub fn convolution_coeffs(nu: &DirichletCharacter, n_max: usize) -> Result<Vec<Complex64>> {
    if nu.is_principal() {
        return Err(Error::PrincipalCharacter);
    }
    let conj = nu.conjugate();
    let mut a = vec![Complex64::new(0.0, 0.0); n_max + 1];
    for d in 1..=n_max {
        let vd = nu.value(d as i64);
        if vd == Complex64::new(0.0, 0.0) {
            continue;
        }
        for k in 1..=n_max / d {
            a[d * k] += vd * conj.value(k as i64);
        }
    }
    Ok(a)
}

/// a(0..=n_max) as Π_p U_{n_p}(cos arg ν(p)); primes dividing N contribute
/// 1 at exponent 0 and 0 otherwise.
pub fn chebyshev_product_coeffs(nu: &DirichletCharacter, n_max: usize) -> Result<Vec<Complex64>> {
    if nu.is_principal() {
        return Err(Error::PrincipalCharacter);
    }
    let modulus = nu.modulus();
    let mut a = vec![Complex64::new(0.0, 0.0); n_max + 1];
    for (n, slot) in a.iter_mut().enumerate().skip(1) {
        let mut v = 1.0;
        for (p, e) in factorize(n as u64) {
            if gcd(p, modulus) > 1 {
                v = 0.0;
                break;
            }
            v *= chebyshev_u(e, nu.arg(p as i64).unwrap().cos());
        }
        *slot = Complex64::new(v, 0.0);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::characters_mod;

    #[test]
    fn small_values() {
        assert_eq!(chebyshev_u(0, 0.7), 1.0);
        assert!((chebyshev_u(1, 0.3) - 0.6).abs() < 1e-15);
        assert_eq!(chebyshev_u(2, 0.0), -1.0);
    }

    #[test]
    fn recursion_matches_trig_form() {
        for i in 0..100 {
            let theta = 0.013 + i as f64 * std::f64::consts::PI / 100.0;
            for n in 0..=200 {
                let a = chebyshev_u(n, theta.cos());
                let b = chebyshev_u_trig(n, theta);
                assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()), "n={n} θ={theta}");
            }
        }
    }

    #[test]
    fn convolution_examples() {
        let nu = &characters_mod(5)[1];
        let a = convolution_coeffs(nu, 10).unwrap();
        assert!((a[4] + 1.0).norm() < 1e-14);
        assert!(a[2].norm() < 1e-14);
        assert!(a[5].norm() < 1e-14);
        assert!(convolution_coeffs(&characters_mod(5)[0], 10).is_err());
    }

    #[test]
    fn divisor_sums_match_chebyshev_products() {
        for n in [5u64, 7] {
            for nu in characters_mod(n).iter().filter(|c| !c.is_principal()) {
                let a = convolution_coeffs(nu, 1000).unwrap();
                let b = chebyshev_product_coeffs(nu, 1000).unwrap();
                for k in 1..=1000 {
                    assert!((a[k] - b[k]).norm() < 1e-10);
                }
            }
        }
    }
}
