use num_complex::Complex64;
use rayon::prelude::*;

use crate::coeffs::convolution_coeffs;
use crate::dirichlet::DirichletCharacter;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeAverage {
    pub t_max: f64,
    pub value: Complex64,
    /// max over the grid of |Im I(t) + Im I(-t)|.
    pub odd_part_residual: f64,
}

/// Truncated Dirichlet polynomials on Re s = 1/2:
/// I(t) = Σ_n a_f*(n) n^{-1/2+it} · Σ_m a_g(m) m^{-1/2-it}.
pub struct CriticalLinePair {
    f: Vec<(f64, Complex64)>,
    g: Vec<(f64, Complex64)>,
}

impl CriticalLinePair {
    pub fn new(nu_f: &DirichletCharacter, nu_g: &DirichletCharacter, n_terms: usize) -> Result<Self> {
        let prep = |nu: &DirichletCharacter, conj: bool| -> Result<Vec<(f64, Complex64)>> {
            let a = convolution_coeffs(nu, n_terms)?;
            Ok((1..=n_terms)
                .filter(|&n| a[n].norm() != 0.0)
                .map(|n| {
                    let c = if conj { a[n].conj() } else { a[n] };
                    ((n as f64).ln(), c / (n as f64).sqrt())
                })
                .collect())
        };
        Ok(CriticalLinePair { f: prep(nu_f, true)?, g: prep(nu_g, false)? })
    }

    pub fn integrand(&self, t: f64) -> Complex64 {
        let a: Complex64 = self.f.iter().map(|(l, c)| c * Complex64::from_polar(1.0, t * l)).sum();
        let b: Complex64 = self.g.iter().map(|(l, c)| c * Complex64::from_polar(1.0, -t * l)).sum();
        a * b
    }

    /// (1/2T) ∫_{-T}^{T} I(t) dt by composite Simpson on `grid_points`
    /// intervals, with the grid evaluated in parallel.
    pub fn average(&self, t_max: f64, grid_points: usize) -> Result<TimeAverage> {
        if !(t_max > 0.0) {
            return Err(Error::Domain(format!("T = {t_max} must be positive")));
        }
        let n = (grid_points + grid_points % 2).max(2);
        let h = 2.0 * t_max / n as f64;
        let values: Vec<Complex64> = (0..=n).into_par_iter().map(|i| self.integrand(-t_max + i as f64 * h)).collect();
        let mut sum = values[0] + values[n];
        for (i, v) in values.iter().enumerate().take(n).skip(1) {
            sum += v * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let integral = sum * (h / 3.0);
        let odd_part_residual = (0..=n / 2)
            .map(|i| (values[i].im + values[n - i].im).abs())
            .fold(0.0, f64::max);
        Ok(TimeAverage { t_max, value: integral / (2.0 * t_max), odd_part_residual })
    }
}

/// One time average; labelled exploratory by callers, since convergence
/// as T grows is not established.
pub fn time_average_inner_product(
    nu_f: &DirichletCharacter,
    nu_g: &DirichletCharacter,
    t_max: f64,
    grid_points: usize,
    n_terms: usize,
) -> Result<TimeAverage> {
    CriticalLinePair::new(nu_f, nu_g, n_terms)?.average(t_max, grid_points)
}

/// Averages at T, 2T, 4T, ... with the grid density held fixed.
pub fn time_average_trend(
    nu_f: &DirichletCharacter,
    nu_g: &DirichletCharacter,
    t_start: f64,
    doublings: u32,
    points_per_unit: f64,
    n_terms: usize,
) -> Result<Vec<TimeAverage>> {
    let pair = CriticalLinePair::new(nu_f, nu_g, n_terms)?;
    (0..=doublings)
        .map(|k| {
            let t = t_start * 2f64.powi(k as i32);
            pair.average(t, (2.0 * t * points_per_unit).ceil() as usize)
        })
        .collect()
}
