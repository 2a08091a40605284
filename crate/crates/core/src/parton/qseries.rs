use num_complex::Complex64;

use crate::coeffs::CoefficientStream;
use crate::error::Result;

/// a(0)..a(N) of Σ a(n) q^n.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    pub coeffs: Vec<Complex64>,
}

impl QSeries {
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// q-expansion of a cusp form with the stream's coefficients; a(0) = 0.
    pub fn from_stream(stream: &CoefficientStream, n_max: usize) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n_max + 1];
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = stream.coefficient(n as u64)?;
        }
        Ok(QSeries { coeffs })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QOp {
    /// b(n) = a(mn).
    U,
    /// b(mn) = a(n), zero off multiples of m.
    V,
    /// b(n) = a(pn) + χ(p)p^{k-1}a(n/p).
    T,
}

/// Coefficient-level U(m), V(m) and T(p).
pub fn uv_on_qseries(f: &QSeries, m: usize, op: QOp, k: u32, chi: Complex64) -> QSeries {
    assert!(m >= 1);
    let n_max = f.truncation();
    let a = &f.coeffs;
    let zero = Complex64::new(0.0, 0.0);
    let coeffs = match op {
        QOp::U => (0..=n_max / m).map(|n| a[m * n]).collect(),
        QOp::V => (0..=n_max).map(|n| if n % m == 0 { a[n / m] } else { zero }).collect(),
        QOp::T => {
            let c = chi * (m as f64).powi(k as i32 - 1);
            (0..=n_max / m)
                .map(|n| a[m * n] + if n % m == 0 { c * a[n / m] } else { zero })
                .collect()
        }
    };
    QSeries { coeffs }
}
