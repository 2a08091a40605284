use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coeffs::convolution_coeffs;
use crate::dirichlet::DirichletCharacter;
use crate::numeric::integrate_adaptive;
use crate::{Error, Result};

use super::bessel::{bessel_k0, bessel_k0_asymptotic};

/// Fourier terms a(n) (ny)^ε √y K₀(2πny/N) of the Bessel expansion at a
/// fixed height y.
#[derive(Clone, Debug, PartialEq)]
pub struct MaassExpansion {
    pub modulus: u64,
    pub y: f64,
    pub epsilon: u32,
    pub terms: Vec<Complex64>,
    pub tail_bound: f64,
}

impl MaassExpansion {
    /// Odd characters are refused unless `allow_odd` is set.
    pub fn new(y: f64, nu: &DirichletCharacter, n_terms: usize, allow_odd: bool) -> Result<Self> {
        if !(y > 0.0) {
            return Err(Error::Domain(format!("y = {y} must be positive")));
        }
        let epsilon = nu.parity_epsilon();
        if epsilon == 1 && !allow_odd {
            return Err(Error::Unsupported("odd character; pass allow_odd".into()));
        }
        let a = convolution_coeffs(nu, n_terms)?;
        let modulus = nu.modulus();
        let nf = modulus as f64;
        let mut terms = vec![Complex64::new(0.0, 0.0); n_terms + 1];
        for n in 1..=n_terms {
            if a[n].norm() == 0.0 {
                continue;
            }
            let k = bessel_k0(2.0 * PI * n as f64 * y / nf)?;
            terms[n] = a[n] * (n as f64 * y).powi(epsilon as i32) * y.sqrt() * k;
        }
        // |a(n)| ≤ d(n) ≤ 2√n and K₀(x) ≤ √(π/2x) e^{-x}
        let mut tail_bound = 0.0;
        for n in n_terms + 1..n_terms + 2000 {
            let x = 2.0 * PI * n as f64 * y / nf;
            let k = (PI / (2.0 * x)).sqrt() * (-x).exp();
            let t = 2.0 * (n as f64).sqrt() * (n as f64 * y).powi(epsilon as i32) * y.sqrt() * k;
            tail_bound += t;
            if t < 1e-30 * tail_bound.max(1e-300) {
                break;
            }
        }
        Ok(MaassExpansion { modulus, y, epsilon, terms, tail_bound })
    }

    /// Σ_n term(n) e^{2πinx/N}.
    pub fn evaluate(&self, x: f64) -> Complex64 {
        let nf = self.modulus as f64;
        self.terms
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, t)| t * Complex64::from_polar(1.0, 2.0 * PI * n as f64 * x / nf))
            .sum()
    }

    /// (1/N) ∫_0^N W(x) e^{-2πinx/N} dx by the periodic trapezoid rule.
    pub fn fourier_coefficient(&self, n: i64, points: usize) -> Complex64 {
        let nf = self.modulus as f64;
        let h = nf / points as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for i in 0..points {
            let x = i as f64 * h;
            sum += self.evaluate(x) * Complex64::from_polar(1.0, -2.0 * PI * n as f64 * x / nf);
        }
        sum / points as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaassValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// The Bessel-expansion waveform at z = x + iy, truncated at n_terms.
pub fn maass_waveform(x: f64, y: f64, nu: &DirichletCharacter, n_terms: usize, allow_odd: bool) -> Result<MaassValue> {
    let e = MaassExpansion::new(y, nu, n_terms, allow_odd)?;
    Ok(MaassValue { value: e.evaluate(x), tail_bound: e.tail_bound })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeRow {
    pub epsilon: f64,
    pub integral: f64,
    /// Growth since the previous (twice larger) cutoff.
    pub increment: Option<f64>,
    /// increment / (ln 2 · ln²ε), the leading cubic-log prediction.
    pub normalized_increment: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DivergenceProbe {
    pub m: u64,
    pub n: u64,
    pub modulus: u64,
    pub rows: Vec<ProbeRow>,
}

fn k0_any(x: f64) -> f64 {
    if x > 700.0 {
        return bessel_k0_asymptotic(x, 6);
    }
    bessel_k0(x).unwrap_or(0.0)
}

/// ∫_ε^{1/ε} (dy/y) K₀(2πmy/N) K₀(2πny/N) along a sequence of cutoffs.
/// Near y = 0 the integrand behaves like ln²y, so the integral grows like
/// |ln ε|³/3 and each halving of ε adds about ln 2 · ln²ε.
pub fn maass_norm_divergence_probe(m: u64, n: u64, modulus: u64, cutoffs: &[f64]) -> Result<DivergenceProbe> {
    if m == 0 || n == 0 || modulus == 0 {
        return Err(Error::Domain("m, n and N must be positive".into()));
    }
    let nf = modulus as f64;
    let cm = 2.0 * PI * m as f64 / nf;
    let cn = 2.0 * PI * n as f64 / nf;
    let f = |u: f64| {
        let y = u.exp();
        Complex64::new(k0_any(cm * y) * k0_any(cn * y), 0.0)
    };
    // the integrand is below 1e-40 once min(cm, cn)·y > 95
    let top = (95.0 / cm.min(cn)).ln();
    let mut rows: Vec<ProbeRow> = Vec::new();
    let mut sorted = cutoffs.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    for eps in sorted {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::Domain(format!("cutoff {eps} outside (0, 1)")));
        }
        let lo = eps.ln();
        let hi = (-lo).min(top);
        let mut total = 0.0;
        let mut a = lo;
        while a < hi {
            let b = (a + 2.0).min(hi);
            total += integrate_adaptive(f, a, b, 1e-14, 1e-12)?.value.re;
            a = b;
        }
        let increment = rows.last().map(|r| total - r.integral);
        let normalized_increment = increment.map(|d| d / (2f64.ln() * lo * lo));
        rows.push(ProbeRow { epsilon: eps, integral: total, increment, normalized_increment });
    }
    Ok(DivergenceProbe { m, n, modulus, rows })
}

/// ε = 2^{-k} for k in first..=last.
pub fn halving_cutoffs(first: u32, last: u32) -> Vec<f64> {
    (first..=last).map(|k| 0.5f64.powi(k as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::character;

    #[test]
    fn waveform_finite_with_small_tail() {
        let nu = character(5, 2).unwrap();
        let v = maass_waveform(0.0, 1.0, &nu, 50, false).unwrap();
        assert!(v.value.norm().is_finite());
        assert!(v.tail_bound < 1e-12);
    }

    #[test]
    fn odd_needs_flag() {
        let nu = character(5, 1).unwrap();
        assert!(maass_waveform(0.0, 1.0, &nu, 20, false).is_err());
        assert!(maass_waveform(0.0, 1.0, &nu, 20, true).is_ok());
    }

    #[test]
    fn periodic() {
        let nu = character(5, 2).unwrap();
        let e = MaassExpansion::new(0.7, &nu, 50, false).unwrap();
        for x in [0.0, 0.3, 1.7] {
            assert!((e.evaluate(x) - e.evaluate(x + 5.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn fourier_extraction() {
        let nu = character(5, 2).unwrap();
        let e = MaassExpansion::new(0.5, &nu, 40, false).unwrap();
        for n in 1..=10i64 {
            let c = e.fourier_coefficient(n, 128);
            assert!((c - e.terms[n as usize]).norm() < 1e-10);
        }
    }

    #[test]
    fn probe_grows_like_cubic_log() {
        let p = maass_norm_divergence_probe(1, 1, 5, &halving_cutoffs(4, 14)).unwrap();
        let incs: Vec<f64> = p.rows.iter().filter_map(|r| r.increment).collect();
        assert!(incs.iter().all(|&d| d > 0.0));
        assert!(incs.windows(2).all(|w| w[1] > w[0]));
        let last = p.rows.last().unwrap().normalized_increment.unwrap();
        assert!((last - 1.0).abs() < 0.5, "{last}");
        let q = maass_norm_divergence_probe(1, 2, 5, &halving_cutoffs(4, 14)).unwrap();
        assert!(q.rows.iter().filter_map(|r| r.increment).all(|d| d > 0.0));
    }
}
